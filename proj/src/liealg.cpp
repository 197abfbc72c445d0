#include "envord/liealg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "envord/error.hpp"

namespace envord {

namespace {

// dense += c * sparse
void axpy(std::vector<Scalar>& dense, const Scalar& c, const SparseVector& v) {
  for (const auto& [index, coeff] : v) dense[index] += c * coeff;
}

SparseVector to_sparse(const std::vector<Scalar>& dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) out.push_back({static_cast<BasisIndex>(i), dense[i]});
  return out;
}

std::string format_sparse(const LieAlgebra& alg, const SparseVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [index, coeff] : v) {
    if (!out.empty()) out += " + ";
    if (!coeff.is_one()) out += coeff.to_string() + "*";
    out += alg.name(index);
  }
  return out;
}

std::string format_indices(const LieAlgebra& alg, std::span<const BasisIndex> idx) {
  std::string out = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ", ";
    out += alg.name(idx[i]);
  }
  return out + ")";
}

}  // namespace

std::shared_ptr<const LieAlgebra> LieAlgebra::create(Ring ring, std::vector<std::string> names, Table table) {
  const std::size_t n = names.size();
  if (n == 0) throw std::invalid_argument("Lie algebra needs at least one basis element");
  if (n > 0xFFFF) throw std::invalid_argument("basis too large");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (names[i] == names[j]) throw std::invalid_argument("duplicate basis name " + names[i]);
  if (table.size() != n) throw std::invalid_argument("structure table must be n x n");
  for (auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("structure table must be n x n");
    for (auto& entry : row) {
      std::vector<Scalar> dense(n, Scalar::zero(ring));
      for (const auto& [index, coeff] : entry) {
        if (index >= n) throw std::invalid_argument("structure constant index out of range");
        dense[index] += Scalar(ring, coeff.value());
      }
      entry = to_sparse(dense);
    }
  }
  return std::shared_ptr<const LieAlgebra>(new LieAlgebra(std::move(ring), std::move(names), std::move(table)));
}

std::shared_ptr<const LieAlgebra> LieAlgebra::reduce_to(const Ring& target) const {
  Table reduced = table_;
  for (auto& row : reduced)
    for (auto& entry : row)
      for (auto& c : entry) c.coeff = Scalar(target, c.coeff.value());
  return create(target, names_, std::move(reduced));
}

std::optional<BasisIndex> LieAlgebra::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<BasisIndex>(it - names_.begin());
}

GVector LieAlgebra::basis_vector(BasisIndex i) const {
  GVector v = zero_vector();
  v.set(i, Scalar::one(ring_));
  return v;
}

GVector LieAlgebra::zero_vector() const {
  return GVector(*this, std::vector<Scalar>(dimension(), Scalar::zero(ring_)));
}

GVector::GVector(const LieAlgebra& algebra, std::vector<Scalar> coords)
    : algebra_(&algebra), coords_(std::move(coords)) {
  if (coords_.size() != algebra.dimension()) throw CarrierMismatch("coordinate count differs from dimension");
  for (auto& c : coords_)
    if (!(c.ring() == algebra.ring())) throw RingMismatch("coordinate outside the algebra's ring");
}

void GVector::set(BasisIndex i, Scalar value) {
  if (!(value.ring() == algebra_->ring())) throw RingMismatch("coordinate outside the algebra's ring");
  coords_.at(i) = std::move(value);
}

bool GVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return c.is_zero(); });
}

SparseVector GVector::sparse() const { return to_sparse(coords_); }

void GVector::require_same_algebra(const GVector& other) const {
  if (algebra_ != other.algebra_) throw CarrierMismatch("vectors from different Lie algebras");
}

GVector& GVector::operator+=(const GVector& other) {
  require_same_algebra(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

GVector& GVector::operator-=(const GVector& other) {
  require_same_algebra(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

GVector operator*(const Scalar& c, GVector v) {
  for (auto& x : v.coords_) x *= c;
  return v;
}

bool operator==(const GVector& a, const GVector& b) {
  a.require_same_algebra(b);
  return a.coords_ == b.coords_;
}

GVector bracket(const GVector& v, const GVector& w) {
  if (&v.algebra() != &w.algebra()) throw CarrierMismatch("bracket of vectors from different Lie algebras");
  const LieAlgebra& alg = v.algebra();
  std::vector<Scalar> out(alg.dimension(), Scalar::zero(alg.ring()));
  for (const auto& [i, a] : v.sparse())
    for (const auto& [j, b] : w.sparse()) axpy(out, a * b, alg.bracket_basis(i, j));
  return GVector(alg, std::move(out));
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok\n";
  std::string out;
  for (const auto& v : violations) out += v.message + "\n";
  return out;
}

ValidationReport validate_algebra(const LieAlgebra& alg) {
  ValidationReport report;
  const std::size_t n = alg.dimension();
  const Scalar zero = Scalar::zero(alg.ring());

  for (BasisIndex i = 0; i < n; ++i) {
    if (!alg.bracket_basis(i, i).empty()) {
      std::vector<BasisIndex> idx{i, i};
      const std::string& x = alg.name(i);
      report.violations.push_back({Violation::Kind::Alternating, idx, alg.bracket_basis(i, i),
                                   "alternating violation at " + format_indices(alg, idx) + ": [" + x + "," + x +
                                       "] = " + format_sparse(alg, alg.bracket_basis(i, i))});
    }
    for (BasisIndex j = i + 1; j < n; ++j) {
      std::vector<Scalar> sum(n, zero);
      axpy(sum, Scalar::one(alg.ring()), alg.bracket_basis(i, j));
      axpy(sum, Scalar::one(alg.ring()), alg.bracket_basis(j, i));
      SparseVector residue = to_sparse(sum);
      if (!residue.empty()) {
        std::vector<BasisIndex> idx{i, j};
        report.violations.push_back({Violation::Kind::Alternating, idx, residue,
                                     "alternating violation at " + format_indices(alg, idx) + ": [" +
                                         alg.name(i) + "," + alg.name(j) + "] + [" + alg.name(j) + "," +
                                         alg.name(i) + "] = " + format_sparse(alg, residue)});
      }
    }
  }

  // [[a,b],c] over the basis
  auto nested = [&](BasisIndex a, BasisIndex b, BasisIndex c, std::vector<Scalar>& acc) {
    for (const auto& [l, coeff] : alg.bracket_basis(a, b)) axpy(acc, coeff, alg.bracket_basis(l, c));
  };
  for (BasisIndex i = 0; i < n; ++i)
    for (BasisIndex j = i; j < n; ++j)
      for (BasisIndex k = j; k < n; ++k) {
        std::vector<Scalar> sum(n, zero);
        nested(i, j, k, sum);
        nested(j, k, i, sum);
        nested(k, i, j, sum);
        SparseVector residue = to_sparse(sum);
        if (!residue.empty()) {
          std::vector<BasisIndex> idx{i, j, k};
          report.violations.push_back({Violation::Kind::Jacobi, idx, residue,
                                       "jacobi violation at " + format_indices(alg, idx) + ": " +
                                           format_sparse(alg, residue)});
        }
      }
  return report;
}

ValidationReport validate_split(const LieAlgebra& alg, std::span<const BasisIndex> part1,
                                std::span<const BasisIndex> part2) {
  ValidationReport report;
  const std::size_t n = alg.dimension();
  std::vector<int> owner(n, 0);
  auto assign = [&](std::span<const BasisIndex> part, int which) {
    for (BasisIndex i : part) {
      if (i >= n) {
        report.violations.push_back({Violation::Kind::Partition, {i}, {},
                                     "partition violation: index " + std::to_string(i) + " out of range"});
        continue;
      }
      if (owner[i] != 0) {
        report.violations.push_back({Violation::Kind::Partition, {i}, {},
                                     "partition violation: " + alg.name(i) + " assigned twice"});
        continue;
      }
      owner[i] = which;
    }
  };
  assign(part1, 1);
  assign(part2, 2);
  for (BasisIndex i = 0; i < n; ++i)
    if (owner[i] == 0)
      report.violations.push_back(
          {Violation::Kind::Partition, {i}, {}, "partition violation: " + alg.name(i) + " unassigned"});
  if (!report.ok()) return report;

  auto check_closed = [&](std::span<const BasisIndex> part, int which) {
    for (BasisIndex i : part)
      for (BasisIndex j : part) {
        if (i >= j) continue;
        SparseVector escape;
        for (const auto& c : alg.bracket_basis(i, j))
          if (owner[c.index] != which) escape.push_back(c);
        if (!escape.empty()) {
          std::vector<BasisIndex> idx{i, j};
          report.violations.push_back({Violation::Kind::Closure, idx, escape,
                                       "closure violation at " + format_indices(alg, idx) + ": " +
                                           format_sparse(alg, escape) + " escapes part " +
                                           std::to_string(which)});
        }
      }
  };
  check_closed(part1, 1);
  check_closed(part2, 2);
  return report;
}

SplitDecomposition::SplitDecomposition(std::shared_ptr<const LieAlgebra> algebra, std::vector<BasisIndex> part1,
                                       std::vector<BasisIndex> part2)
    : algebra_(std::move(algebra)), part1_(std::move(part1)), part2_(std::move(part2)) {
  in_first_.assign(algebra_->dimension(), false);
  for (BasisIndex i : part1_) in_first_[i] = true;
}

std::shared_ptr<const SplitDecomposition> SplitDecomposition::create(std::shared_ptr<const LieAlgebra> algebra,
                                                                     std::vector<BasisIndex> part1,
                                                                     std::vector<BasisIndex> part2) {
  if (!algebra) throw std::invalid_argument("null algebra");
  ValidationReport report = validate_split(*algebra, part1, part2);
  if (!report.ok()) throw ValidationError("invalid split:\n" + report.to_string());
  return std::shared_ptr<const SplitDecomposition>(
      new SplitDecomposition(std::move(algebra), std::move(part1), std::move(part2)));
}

GVector SplitDecomposition::project(Part p, const GVector& v) const {
  if (&v.algebra() != algebra_.get()) throw CarrierMismatch("projecting a vector from another algebra");
  GVector out = v;
  for (BasisIndex i = 0; i < algebra_->dimension(); ++i)
    if (part_of(i) != p) out.set(i, Scalar::zero(algebra_->ring()));
  return out;
}

}  // namespace envord
