#include <stdexcept>

#include "envord/checks.hpp"

namespace envord {

namespace {

using Matrix = std::vector<std::vector<long>>;

LieAlgebra::Table empty_table(std::size_t n) {
  return LieAlgebra::Table(n, std::vector<SparseVector>(n));
}

}  // namespace

std::shared_ptr<const LieAlgebra> make_sl2(const Ring& ring) {
  enum : BasisIndex { e, f, h };
  auto table = empty_table(3);
  auto set = [&](BasisIndex a, BasisIndex b, BasisIndex k, long c) {
    table[a][b] = {{k, Scalar(ring, c)}};
    table[b][a] = {{k, Scalar(ring, -c)}};
  };
  set(e, f, h, 1);
  set(h, e, e, 2);
  set(h, f, f, -2);
  return LieAlgebra::create(ring, {"e", "f", "h"}, std::move(table));
}

std::shared_ptr<const LieAlgebra> make_sln(int n, const Ring& ring) {
  if (n < 2 || n > 9) throw std::invalid_argument("sl(n) supported for 2 <= n <= 9");
  std::vector<std::string> names;
  std::vector<Matrix> mats;
  auto unit = [&](int i, int j) {
    Matrix m(n, std::vector<long>(n, 0));
    m[i][j] = 1;
    return m;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      mats.push_back(unit(i, j));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      mats.push_back(unit(i, j));
    }
  for (int k = 0; k + 1 < n; ++k) {
    names.push_back("H" + std::to_string(k + 1));
    Matrix m(n, std::vector<long>(n, 0));
    m[k][k] = 1;
    m[k + 1][k + 1] = -1;
    mats.push_back(std::move(m));
  }

  // Coordinates of a traceless matrix: off-diagonal entries directly,
  // diagonal through partial sums (H_k has +1 at k and -1 at k+1).
  auto decompose = [&](const Matrix& c) {
    SparseVector out;
    for (std::size_t b = 0; b < mats.size(); ++b) {
      long coeff = 0;
      const std::string& nm = names[b];
      if (nm[0] == 'E') {
        coeff = c[nm[1] - '1'][nm[2] - '1'];
      } else {
        const int k = nm[1] - '1';
        for (int i = 0; i <= k; ++i) coeff += c[i][i];
      }
      if (coeff != 0) out.push_back({static_cast<BasisIndex>(b), Scalar(ring, coeff)});
    }
    return out;
  };

  const std::size_t dim = mats.size();
  auto table = empty_table(dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      Matrix c(n, std::vector<long>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) c[i][j] += mats[a][i][k] * mats[b][k][j] - mats[b][i][k] * mats[a][k][j];
      table[a][b] = decompose(c);
    }
  return LieAlgebra::create(ring, std::move(names), std::move(table));
}

std::shared_ptr<const LieAlgebra> make_heisenberg(const Ring& ring) {
  auto table = empty_table(3);
  table[0][1] = {{2, Scalar::one(ring)}};
  table[1][0] = {{2, -Scalar::one(ring)}};
  return LieAlgebra::create(ring, {"x", "y", "c"}, std::move(table));
}

std::shared_ptr<const LieAlgebra> make_abelian(int n, const Ring& ring) {
  if (n < 1 || n > 26) throw std::invalid_argument("abelian example supports 1..26 generators");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return LieAlgebra::create(ring, std::move(names), empty_table(n));
}

void ExampleRegistry::add(ExampleEntry entry) {
  if (find(entry.name)) throw std::invalid_argument("duplicate registry entry " + entry.name);
  if (!entry.split && validate_split(*entry.algebra, entry.part1, entry.part2).ok())
    entry.split = SplitDecomposition::create(entry.algebra, entry.part1, entry.part2);
  entries_.push_back(std::move(entry));
}

const ExampleEntry* ExampleRegistry::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

ExampleRegistry builtin_examples() {
  ExampleRegistry reg;
  const Ring zz = Ring::integers();

  // sl2: e=0 f=1 h=2
  reg.add({"sl2_Z", make_sl2(zz), {1}, {2, 0}, nullptr});
  reg.add({"sl2_Q", make_sl2(Ring::rationals()), {0, 2}, {1}, nullptr});

  // sl3: E12 E13 E23 | E21 E31 E32 | H1 H2, split (T+ (+) D) | T-
  auto sl3 = make_sln(3, zz);
  const std::vector<BasisIndex> upper_and_diag{0, 1, 2, 6, 7};
  const std::vector<BasisIndex> lower{3, 4, 5};
  reg.add({"sl3_Z", sl3, upper_and_diag, lower, nullptr});
  for (long q : {2L, 3L, 4L})
    reg.add({"sl3_Z" + std::to_string(q), sl3->reduce_to(Ring::integers_mod(q)), upper_and_diag, lower, nullptr});

  reg.add({"heisenberg_Z", make_heisenberg(zz), {0}, {1, 2}, nullptr});
  reg.add({"abelian3_Z", make_abelian(3, zz), {0, 2}, {1}, nullptr});
  return reg;
}

}  // namespace envord
