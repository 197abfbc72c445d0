#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "envord/envelope.hpp"

namespace envord {

/// Parsed algebra description file.
///
///   # comment
///   ring Z | ring Q | ring Zmod <q>
///   basis <name>+
///   bracket <a> <b> = <lincomb>
///   split <name>* | <name>*
///
/// Unlisted brackets are zero and [b,a] defaults to -[a,b].
struct AlgebraSpec {
  Ring ring = Ring::integers();
  std::vector<std::string> basis;
  /// Nonzero structure constants, both orientations.
  std::map<std::pair<BasisIndex, BasisIndex>, SparseVector> brackets;
  std::optional<std::pair<std::vector<BasisIndex>, std::vector<BasisIndex>>> split;

  /// Builds the (unvalidated) algebra.
  std::shared_ptr<const LieAlgebra> build_algebra() const;

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b);
};

/// Throws ParseError carrying the offending line and column.
AlgebraSpec parse_spec(std::string_view text);

/// Canonical text that parse_spec maps back to an equal AlgebraSpec.
std::string print_spec(const AlgebraSpec& spec);

/// Parses a user expression into an element of T(g):
///
///   expr   := term (('+' | '-') term)*
///   term   := sign* (coeff ['*' factor ('*' factor)*] | factor ('*' factor)*)
///   factor := name | '1' | '(' expr ')'
///   coeff  := integer | integer '/' integer        (fractions only over Q)
///
/// Throws ParseError.
EnvElement parse_expr(std::string_view text, const LieAlgebra& alg);

}  // namespace envord
