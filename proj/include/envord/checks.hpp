#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "envord/normalform.hpp"

namespace envord {

// ---------------------------------------------------------------------------
// Example algebras

/// sl(2) with basis e, f, h: [e,f] = h, [h,e] = 2e, [h,f] = -2f.
std::shared_ptr<const LieAlgebra> make_sl2(const Ring& ring);

/// sl(n) from matrix commutators. Basis: E_ij for i < j (row-major), E_ij for
/// i > j (row-major), then H_k = E_kk - E_(k+1)(k+1). Names are "E12", "H1"
/// etc. Requires 2 <= n <= 9.
std::shared_ptr<const LieAlgebra> make_sln(int n, const Ring& ring);

/// Heisenberg algebra with basis x, y, c: [x,y] = c, c central.
std::shared_ptr<const LieAlgebra> make_heisenberg(const Ring& ring);

/// Abelian algebra with basis a, b, c, ... (n <= 26).
std::shared_ptr<const LieAlgebra> make_abelian(int n, const Ring& ring);

struct ExampleEntry {
  std::string name;
  std::shared_ptr<const LieAlgebra> algebra;
  std::vector<BasisIndex> part1;
  std::vector<BasisIndex> part2;
  /// Filled by ExampleRegistry::add when the parts form a valid split.
  std::shared_ptr<const SplitDecomposition> split;
};

class ExampleRegistry {
 public:
  void add(ExampleEntry entry);
  const std::vector<ExampleEntry>& entries() const& noexcept { return entries_; }
  std::vector<ExampleEntry> entries() && { return std::move(entries_); }
  /// nullptr when absent.
  const ExampleEntry* find(std::string_view name) const;

 private:
  std::vector<ExampleEntry> entries_;
};

/// sl2_Z, sl2_Q, sl3_Z, sl3_Z2, sl3_Z3, sl3_Z4, heisenberg_Z, abelian3_Z.
ExampleRegistry builtin_examples();

// ---------------------------------------------------------------------------
// Random generation

/// Deterministic per-case random source: the stream for (seed, stream, index)
/// never depends on what other cases drew.
class Generator {
 public:
  Generator(std::uint64_t seed, std::string_view stream, std::uint64_t index);

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Nonzero numerator |n| <= 9; for Q also a denominator in [1, 9].
  Scalar scalar(const Ring& ring);
  /// Degree <= max_degree, shorter words more likely; letters uniform over
  /// `letters` (empty word when `letters` is empty).
  Word word(std::span<const BasisIndex> letters, int max_degree);
  GVector vector(const LieAlgebra& alg);
  EnvElement env(const LieAlgebra& alg, int max_degree);
  /// Each term has total degree <= max_degree.
  StateElement state(const SplitDecomposition& split, int max_degree);

 private:
  int degree(int max_degree);
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Property suite

enum class Property {
  Inverse,
  Oracle,
  LieAction,
  Filtration,
  RightLinearity,
  MuCompat,
  WellDefined,
  Linearity,
};

/// "inverse", "oracle", "lie-action", "filtration", "right-linearity",
/// "mu-compat", "well-defined", "linearity".
std::string_view property_name(Property p);
/// Throws ConfigError for unknown names.
Property parse_property(std::string_view name);
const std::vector<Property>& all_properties();

struct SuiteConfig {
  std::uint64_t seed = 42;
  int cases = 100;
  int max_degree = 4;
  /// Ring descriptors to keep; empty keeps every entry.
  std::vector<std::string> rings;
  /// Empty selects every property.
  std::set<Property> properties;

  /// Throws ConfigError when cases < 1 or max_degree < 0.
  void validate() const;
};

enum class GenerateKind { Word, State, Vector };

/// Case `index` of the seeded stream for `kind` on `entry`. The entry must be
/// valid.
std::variant<Word, StateElement, GVector> generate(GenerateKind kind, const SuiteConfig& cfg,
                                                    const ExampleEntry& entry, std::uint64_t index);

/// Inputs of one property instance. Each property reads the slots it needs.
struct Case {
  std::vector<GVector> vectors;
  std::vector<EnvElement> envs;
  std::vector<StateElement> states;
  std::vector<Word> words;
  std::vector<Scalar> scalars;
};

/// Generates case `index` of property `p`. For LieAction the basis pair is
/// index mod n^2, so n^2 * k consecutive indices cover every pair k times.
Case make_case(Property p, const ActionContext& ctx, std::uint64_t seed, std::string_view entry_name,
               std::uint64_t index, int max_degree);

/// True when the property holds; exceptions count as failures.
bool holds(Property p, const ActionContext& ctx, const Case& c, std::string* why = nullptr);

/// Greedy shrinking: drop terms, drop letters, zero coordinates while the
/// property still fails. Returns the number of accepted steps.
std::size_t shrink(Property p, const ActionContext& ctx, Case& c);
/// Same walk for an arbitrary failure predicate; `c` must satisfy it.
std::size_t shrink(const std::function<bool(const Case&)>& fails, Case& c);

std::string describe_case(const Case& c, const LieAlgebra& alg);

struct PropertyResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool skipped = false;
  /// Rendered minimal counterexample for the first failing case.
  std::string counterexample;
};

/// Runs `cases` instances (times n^2 for LieAction) of one property.
PropertyResult run_property(Property p, const ActionContext& ctx, std::uint64_t seed, std::string_view entry_name,
                            int cases, int max_degree);

struct EntryReport {
  std::string name;
  std::string ring;
  bool valid = false;
  std::string validation;
  std::vector<PropertyResult> properties;

  std::size_t passed() const;
  std::size_t failed() const;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<EntryReport> entries;

  bool all_valid() const;
  bool all_passed() const;
  /// Deterministic text, ending each entry with
  /// "SUITE <name> pass=<n> fail=<m> seed=<s>".
  std::string render() const;
};

SuiteReport run_suite(const SuiteConfig& cfg, const ExampleRegistry& registry);

}  // namespace envord
