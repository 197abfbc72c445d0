#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "envord/ring.hpp"

namespace envord {

using BasisIndex = std::uint16_t;

struct Component {
  BasisIndex index;
  Scalar coeff;

  friend bool operator==(const Component&, const Component&) = default;
};

/// Sparse coordinate vector: components sorted by index, all coefficients
/// nonzero.
using SparseVector = std::vector<Component>;

class GVector;

/// Lie algebra free of finite rank over its ring, presented by structure
/// constants: bracket(i, j) is the coordinate vector of [e_i, e_j].
///
/// Construction checks only shapes; the Lie axioms are checked separately by
/// validate_algebra so that broken tables can still be inspected.
class LieAlgebra {
 public:
  using Table = std::vector<std::vector<SparseVector>>;

  /// Throws std::invalid_argument when the table is not n x n, names are
  /// empty or repeated, or an index is out of range. Coefficients are
  /// re-canonicalized into `ring`.
  static std::shared_ptr<const LieAlgebra> create(Ring ring, std::vector<std::string> names, Table table);

  /// Same algebra with every structure constant mapped into `target`; used
  /// for the mod-q reductions of integral tables.
  std::shared_ptr<const LieAlgebra> reduce_to(const Ring& target) const;

  LieAlgebra(const LieAlgebra&) = delete;
  LieAlgebra& operator=(const LieAlgebra&) = delete;

  const Ring& ring() const noexcept { return ring_; }
  std::size_t dimension() const noexcept { return names_.size(); }
  const std::string& name(BasisIndex i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<BasisIndex> index_of(std::string_view name) const;

  /// [e_i, e_j] over the basis.
  const SparseVector& bracket_basis(BasisIndex i, BasisIndex j) const { return table_[i][j]; }
  const Table& table() const noexcept { return table_; }

  GVector basis_vector(BasisIndex i) const;
  GVector zero_vector() const;

 private:
  LieAlgebra(Ring ring, std::vector<std::string> names, Table table)
      : ring_(std::move(ring)), names_(std::move(names)), table_(std::move(table)) {}

  Ring ring_;
  std::vector<std::string> names_;
  Table table_;
};

/// Element of a LieAlgebra in dense coordinates. Holds a non-owning pointer
/// to its algebra, which must outlive it.
class GVector {
 public:
  GVector(const LieAlgebra& algebra, std::vector<Scalar> coords);

  const LieAlgebra& algebra() const noexcept { return *algebra_; }
  const Scalar& operator[](BasisIndex i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }
  void set(BasisIndex i, Scalar value);

  bool is_zero() const;
  SparseVector sparse() const;

  GVector& operator+=(const GVector& other);
  GVector& operator-=(const GVector& other);
  friend GVector operator+(GVector a, const GVector& b) { return a += b; }
  friend GVector operator-(GVector a, const GVector& b) { return a -= b; }
  friend GVector operator*(const Scalar& c, GVector v);
  friend bool operator==(const GVector& a, const GVector& b);

 private:
  void require_same_algebra(const GVector& other) const;

  const LieAlgebra* algebra_;
  std::vector<Scalar> coords_;
};

/// Bilinear extension of the structure table. Throws CarrierMismatch.
GVector bracket(const GVector& v, const GVector& w);

struct Violation {
  enum class Kind { Alternating, Jacobi, Partition, Closure };
  Kind kind;
  /// (i, i) or (i, j) for Alternating, (i, j, k) for Jacobi, (i, j) for
  /// Closure, (i) for Partition.
  std::vector<BasisIndex> indices;
  /// The nonzero residue: c[i][i], c[i][j] + c[j][i], the Jacobi sum, or the
  /// bracket component escaping the part.
  SparseVector residue;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  /// One line per violation, or "ok".
  std::string to_string() const;
};

/// Checks alternation on all pairs and the Jacobi identity on all basis
/// triples i <= j <= k.
ValidationReport validate_algebra(const LieAlgebra& algebra);

/// Checks that part1, part2 partition the basis and that each part is closed
/// under the bracket.
ValidationReport validate_split(const LieAlgebra& algebra, std::span<const BasisIndex> part1,
                                std::span<const BasisIndex> part2);

enum class Part : int { First = 1, Second = 2 };

/// g = g1 (+) g2 as a partition of the basis into two bracket-closed index
/// sets. Embeddings and projectors are coordinate masks.
class SplitDecomposition {
 public:
  /// Throws ValidationError when validate_split reports anything.
  static std::shared_ptr<const SplitDecomposition> create(std::shared_ptr<const LieAlgebra> algebra,
                                                          std::vector<BasisIndex> part1,
                                                          std::vector<BasisIndex> part2);

  SplitDecomposition(const SplitDecomposition&) = delete;
  SplitDecomposition& operator=(const SplitDecomposition&) = delete;

  const LieAlgebra& algebra() const noexcept { return *algebra_; }
  const std::shared_ptr<const LieAlgebra>& algebra_ptr() const noexcept { return algebra_; }
  const std::vector<BasisIndex>& part(Part p) const noexcept { return p == Part::First ? part1_ : part2_; }
  Part part_of(BasisIndex i) const { return in_first_[i] ? Part::First : Part::Second; }

  /// Zeroes every coordinate outside part `p`.
  GVector project(Part p, const GVector& v) const;

 private:
  SplitDecomposition(std::shared_ptr<const LieAlgebra> algebra, std::vector<BasisIndex> part1,
                     std::vector<BasisIndex> part2);

  std::shared_ptr<const LieAlgebra> algebra_;
  std::vector<BasisIndex> part1_;
  std::vector<BasisIndex> part2_;
  std::vector<bool> in_first_;
};

}  // namespace envord
