#pragma once

#include <string>

#include "envord/envelope.hpp"

namespace envord {

// Printed forms shared by the CLI and suite reports. Words print as
// '*'-joined basis names ("1" when empty); terms print as
// "<coeff> * <word>" and state terms as "<coeff> * <w1> (x) <w2>".
// Everything printed here parses back with parse_expr.

std::string format_word(const LieAlgebra& alg, const Word& w);
std::string format_vector(const GVector& v);

/// One term per line in term order; "0" for the zero element.
std::string format_env_lines(const EnvElement& u);
std::string format_state_lines(const StateElement& s);

/// Terms joined by " + " on one line; "0" for zero.
std::string format_env_inline(const EnvElement& u);
std::string format_state_inline(const StateElement& s);

}  // namespace envord
