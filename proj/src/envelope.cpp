#include "envord/envelope.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "envord/error.hpp"

namespace envord {

Word Word::prepend(Letter x) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + 1);
  out.push_back(x);
  out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

Word Word::append(Letter x) const {
  std::vector<Letter> out = letters_;
  out.push_back(x);
  return Word(std::move(out));
}

Word Word::subword(std::size_t pos, std::size_t count) const {
  pos = std::min(pos, letters_.size());
  count = std::min(count, letters_.size() - pos);
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + count));
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.degree() + b.degree());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

BasisOrder BasisOrder::declaration(std::size_t n) {
  std::vector<std::uint32_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[i] = static_cast<std::uint32_t>(i);
  return BasisOrder(std::move(rank));
}

BasisOrder BasisOrder::from_sequence(std::span<const BasisIndex> sequence, std::size_t n) {
  if (sequence.size() != n) throw std::invalid_argument("order must list every basis element exactly once");
  std::vector<std::uint32_t> rank(n, UINT32_MAX);
  for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
    BasisIndex i = sequence[pos];
    if (i >= n || rank[i] != UINT32_MAX)
      throw std::invalid_argument("order must list every basis element exactly once");
    rank[i] = static_cast<std::uint32_t>(pos);
  }
  return BasisOrder(std::move(rank));
}

BasisOrder split_order(const SplitDecomposition& split) {
  std::vector<BasisIndex> seq;
  for (Part p : {Part::First, Part::Second}) {
    std::vector<BasisIndex> part = split.part(p);
    std::sort(part.begin(), part.end());
    seq.insert(seq.end(), part.begin(), part.end());
  }
  return BasisOrder::from_sequence(seq, split.algebra().dimension());
}

// ---------------------------------------------------------------------------
// EnvElement

EnvElement EnvElement::one(const LieAlgebra& algebra) { return word(algebra, Word{}); }

EnvElement EnvElement::word(const LieAlgebra& algebra, Word w, const Scalar& coeff) {
  EnvElement u(algebra);
  u.add_term(w, coeff);
  return u;
}

EnvElement EnvElement::word(const LieAlgebra& algebra, Word w) {
  return word(algebra, std::move(w), Scalar::one(algebra.ring()));
}

EnvElement EnvElement::from_vector(const GVector& v) {
  EnvElement u(v.algebra());
  for (const auto& [i, c] : v.sparse()) u.add_term(Word{i}, c);
  return u;
}

int EnvElement::max_degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.degree()));
  return d;
}

void EnvElement::add_term(const Word& w, const Scalar& coeff) {
  if (!(coeff.ring() == algebra_->ring())) throw RingMismatch("coefficient outside the algebra's ring");
  for (Letter x : w)
    if (x >= algebra_->dimension()) throw CarrierMismatch("letter outside the basis");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void EnvElement::require_same_algebra(const EnvElement& other) const {
  if (algebra_ != other.algebra_) throw CarrierMismatch("envelope elements over different algebras");
}

EnvElement& EnvElement::operator+=(const EnvElement& other) {
  require_same_algebra(other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& other) {
  require_same_algebra(other);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

EnvElement operator*(const Scalar& c, const EnvElement& u) {
  EnvElement out(*u.algebra_);
  for (const auto& [w, a] : u.terms_) out.add_term(w, c * a);
  return out;
}

EnvElement operator*(const EnvElement& u, const EnvElement& v) {
  u.require_same_algebra(v);
  EnvElement out(*u.algebra_);
  for (const auto& [w1, a] : u.terms_)
    for (const auto& [w2, b] : v.terms_) out.add_term(w1 + w2, a * b);
  return out;
}

bool operator==(const EnvElement& a, const EnvElement& b) {
  a.require_same_algebra(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), [](const auto& x, const auto& y) {
    return x.first == y.first && x.second == y.second;
  });
}

// ---------------------------------------------------------------------------
// StateElement

StateElement StateElement::unit(const SplitDecomposition& split) { return pure(split, Word{}, Word{}); }

StateElement StateElement::pure(const SplitDecomposition& split, Word left, Word right, const Scalar& coeff) {
  StateElement s(split);
  s.add_term(left, right, coeff);
  return s;
}

StateElement StateElement::pure(const SplitDecomposition& split, Word left, Word right) {
  return pure(split, std::move(left), std::move(right), Scalar::one(split.algebra().ring()));
}

int StateElement::max_left_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, static_cast<int>(key.first.degree()));
  return d;
}

void StateElement::add_term(const Word& left, const Word& right, const Scalar& coeff) {
  const LieAlgebra& alg = split_->algebra();
  if (!(coeff.ring() == alg.ring())) throw RingMismatch("coefficient outside the algebra's ring");
  for (Letter x : left)
    if (x >= alg.dimension() || split_->part_of(x) != Part::First)
      throw CarrierMismatch("left factor letter outside part 1");
  for (Letter x : right)
    if (x >= alg.dimension() || split_->part_of(x) != Part::Second)
      throw CarrierMismatch("right factor letter outside part 2");
  accumulate(left, right, coeff);
}

void StateElement::accumulate(Word left, Word right, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{std::move(left), std::move(right)}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void StateElement::require_same_split(const StateElement& other) const {
  if (split_ != other.split_) throw CarrierMismatch("state elements over different splits");
}

StateElement& StateElement::operator+=(const StateElement& other) {
  require_same_split(other);
  for (const auto& [key, c] : other.terms_) accumulate(key.first, key.second, c);
  return *this;
}

StateElement& StateElement::operator-=(const StateElement& other) {
  require_same_split(other);
  for (const auto& [key, c] : other.terms_) accumulate(key.first, key.second, -c);
  return *this;
}

StateElement operator*(const Scalar& c, const StateElement& s) {
  if (!(c.ring() == s.algebra().ring())) throw RingMismatch("scalar outside the algebra's ring");
  StateElement out(*s.split_);
  for (const auto& [key, a] : s.terms_) out.accumulate(key.first, key.second, c * a);
  return out;
}

bool operator==(const StateElement& a, const StateElement& b) {
  a.require_same_split(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), [](const auto& x, const auto& y) {
    return x.first == y.first && x.second == y.second;
  });
}

StateElement StateElement::right_multiply(const Word& m) const {
  for (Letter x : m)
    if (x >= algebra().dimension() || split_->part_of(x) != Part::Second)
      throw CarrierMismatch("right factor letter outside part 2");
  StateElement out(*split_);
  for (const auto& [key, c] : terms_) out.accumulate(key.first, key.second + m, c);
  return out;
}

EnvElement mu_state(const StateElement& s) {
  EnvElement out(s.algebra());
  for (const auto& [key, c] : s.terms()) out.add_term(key.first + key.second, c);
  return out;
}

// ---------------------------------------------------------------------------
// Straightening

EnvElement straighten(const EnvElement& u, const BasisOrder& order, StraightenStats* stats) {
  const LieAlgebra& alg = u.algebra();
  if (order.size() != alg.dimension()) throw std::invalid_argument("order size differs from dimension");

  std::map<Word, Scalar> pending(u.terms().begin(), u.terms().end());
  auto push = [&](Word w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = pending.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };

  EnvElement result(alg);
  while (!pending.empty()) {
    // Largest word first, so that contributions to it from longer words
    // have already been merged.
    auto last = std::prev(pending.end());
    Word w = last->first;
    Scalar c = last->second;
    pending.erase(last);

    std::size_t i = 0;
    while (i + 1 < w.degree() && !order.less(w[i + 1], w[i])) ++i;
    if (i + 1 >= w.degree()) {
      result.add_term(w, c);
      continue;
    }
    if (stats) ++stats->rewrites;

    const Letter x = w[i];
    const Letter y = w[i + 1];
    std::vector<Letter> swapped(w.begin(), w.end());
    std::swap(swapped[i], swapped[i + 1]);
    push(Word(std::move(swapped)), c);

    const Word prefix = w.subword(0, i);
    const Word suffix = w.subword(i + 2, w.degree());
    for (const auto& [k, coeff] : alg.bracket_basis(x, y)) push(prefix + Word{k} + suffix, c * coeff);
  }
  return result;
}

bool env_eq(const EnvElement& u, const EnvElement& v, const BasisOrder& order) {
  return straighten(u - v, order).is_zero();
}

bool env_eq(const EnvElement& u, const EnvElement& v) {
  return env_eq(u, v, BasisOrder::declaration(u.algebra().dimension()));
}

StateElement state_canon(const StateElement& s) {
  const SplitDecomposition& split = s.split();
  const LieAlgebra& alg = split.algebra();
  const BasisOrder order = split_order(split);

  std::map<Word, EnvElement> cache;
  auto canonical = [&](const Word& w) -> const EnvElement& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, straighten(EnvElement::word(alg, w), order)).first;
    return it->second;
  };

  StateElement out(split);
  for (const auto& [key, c] : s.terms()) {
    const EnvElement left = canonical(key.first);
    const EnvElement& right = canonical(key.second);
    for (const auto& [l, a] : left.terms())
      for (const auto& [r, b] : right.terms()) out.add_term(l, r, c * a * b);
  }
  return out;
}

bool state_eq(const StateElement& s, const StateElement& t) { return state_canon(s - t).is_zero(); }

StateElement oracle_normal_order(const EnvElement& u, const SplitDecomposition& split) {
  if (&u.algebra() != &split.algebra()) throw CarrierMismatch("element and split over different algebras");
  const EnvElement canonical = straighten(u, split_order(split));
  StateElement out(split);
  for (const auto& [w, c] : canonical.terms()) {
    std::size_t cut = 0;
    while (cut < w.degree() && split.part_of(w[cut]) == Part::First) ++cut;
    for (std::size_t i = cut; i < w.degree(); ++i)
      if (split.part_of(w[i]) != Part::Second)
        throw OracleMismatch("split-ordered word does not factor as part-1 prefix and part-2 suffix");
    out.add_term(w.subword(0, cut), w.subword(cut, w.degree()), c);
  }
  return out;
}

}  // namespace envord
