#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "envord/liealg.hpp"

namespace envord {

using Letter = BasisIndex;

/// Finite sequence of basis letters; the empty word stands for 1.
///
/// Words order by degree first, then lexicographically by basis index. This
/// is the iteration order of every term container and of all printed output.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t degree() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word prepend(Letter x) const;
  Word append(Letter x) const;
  Word subword(std::size_t pos, std::size_t count) const;
  friend Word operator+(const Word& a, const Word& b);

  friend bool operator==(const Word& a, const Word& b) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

/// Total order on basis indices used by straightening.
class BasisOrder {
 public:
  /// Declaration order 0 < 1 < ... < n-1.
  static BasisOrder declaration(std::size_t n);
  /// `sequence` lists every index exactly once, smallest first. Throws
  /// std::invalid_argument otherwise.
  static BasisOrder from_sequence(std::span<const BasisIndex> sequence, std::size_t n);

  bool less(Letter a, Letter b) const { return rank_[a] < rank_[b]; }
  std::size_t size() const noexcept { return rank_.size(); }

 private:
  explicit BasisOrder(std::vector<std::uint32_t> rank) : rank_(std::move(rank)) {}
  std::vector<std::uint32_t> rank_;
};

/// Split-compatible order: part 1 before part 2, declaration order inside each.
BasisOrder split_order(const SplitDecomposition& split);

/// Element of T(g), read as a representative in U(g) (or U(g_i) when every
/// letter lies in part i). Sparse: no zero coefficient is ever stored.
class EnvElement {
 public:
  using Terms = std::map<Word, Scalar>;

  explicit EnvElement(const LieAlgebra& algebra) : algebra_(&algebra) {}

  static EnvElement one(const LieAlgebra& algebra);
  static EnvElement word(const LieAlgebra& algebra, Word w, const Scalar& coeff);
  static EnvElement word(const LieAlgebra& algebra, Word w);
  /// The length-1 inclusion of g.
  static EnvElement from_vector(const GVector& v);

  const LieAlgebra& algebra() const noexcept { return *algebra_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// -1 for zero.
  int max_degree() const;

  /// Adds coeff * w, pruning the term if it cancels. Throws CarrierMismatch
  /// for letters outside the basis and RingMismatch for foreign scalars.
  void add_term(const Word& w, const Scalar& coeff);

  EnvElement& operator+=(const EnvElement& other);
  EnvElement& operator-=(const EnvElement& other);
  friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
  friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
  friend EnvElement operator*(const Scalar& c, const EnvElement& u);
  /// Bilinear extension of concatenation.
  friend EnvElement operator*(const EnvElement& u, const EnvElement& v);
  /// Equality of representatives, not of classes in U(g); see env_eq.
  friend bool operator==(const EnvElement& a, const EnvElement& b);

 private:
  void require_same_algebra(const EnvElement& other) const;

  const LieAlgebra* algebra_;
  Terms terms_;
};

inline EnvElement env_mul(const EnvElement& u, const EnvElement& v) { return u * v; }

/// Element of T(g1) (x) U(g2), or of U(g1) (x) U(g2) by representative: a
/// sparse sum of (part-1 word, part-2 word) pairs.
class StateElement {
 public:
  using Key = std::pair<Word, Word>;
  using Terms = std::map<Key, Scalar>;

  explicit StateElement(const SplitDecomposition& split) : split_(&split) {}

  /// 1 (x) 1.
  static StateElement unit(const SplitDecomposition& split);
  static StateElement pure(const SplitDecomposition& split, Word left, Word right, const Scalar& coeff);
  static StateElement pure(const SplitDecomposition& split, Word left, Word right);

  const SplitDecomposition& split() const noexcept { return *split_; }
  const LieAlgebra& algebra() const noexcept { return split_->algebra(); }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Largest left-word degree, -1 for zero.
  int max_left_degree() const;

  /// Throws CarrierMismatch when a left letter is outside part 1 or a right
  /// letter outside part 2.
  void add_term(const Word& left, const Word& right, const Scalar& coeff);

  StateElement& operator+=(const StateElement& other);
  StateElement& operator-=(const StateElement& other);
  friend StateElement operator+(StateElement a, const StateElement& b) { return a += b; }
  friend StateElement operator-(StateElement a, const StateElement& b) { return a -= b; }
  friend StateElement operator*(const Scalar& c, const StateElement& s);
  friend bool operator==(const StateElement& a, const StateElement& b);

  /// Appends m to every right word (right U(g2)-module structure).
  StateElement right_multiply(const Word& m) const;

 private:
  friend class ActionContext;
  // Unchecked accumulation for the action recursion.
  void accumulate(Word left, Word right, const Scalar& coeff);
  void require_same_split(const StateElement& other) const;

  const SplitDecomposition* split_;
  Terms terms_;
};

/// Concatenates each (w1, w2) into w1 w2.
EnvElement mu_state(const StateElement& s);

struct StraightenStats {
  std::size_t rewrites = 0;
};

/// PBW canonical form: rewrites the leftmost inversion x y (x > y) into
/// y x + [x, y] until every word is nondecreasing under `order`.
EnvElement straighten(const EnvElement& u, const BasisOrder& order, StraightenStats* stats = nullptr);

/// Equality in U(g).
bool env_eq(const EnvElement& u, const EnvElement& v, const BasisOrder& order);
bool env_eq(const EnvElement& u, const EnvElement& v);

/// Straightens both factors inside their own subalgebra.
StateElement state_canon(const StateElement& s);
/// Equality in U(g1) (x) U(g2).
bool state_eq(const StateElement& s, const StateElement& t);

/// Straightens u under the split-compatible order and cuts every resulting
/// word into its part-1 prefix and part-2 suffix.
StateElement oracle_normal_order(const EnvElement& u, const SplitDecomposition& split);

}  // namespace envord
