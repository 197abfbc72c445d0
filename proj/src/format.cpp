#include "envord/format.hpp"

namespace envord {

std::string format_word(const LieAlgebra& alg, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter x : w) {
    if (!out.empty()) out += '*';
    out += alg.name(x);
  }
  return out;
}

std::string format_vector(const GVector& v) {
  std::string out;
  for (const auto& [i, c] : v.sparse()) {
    if (!out.empty()) out += " + ";
    out += c.to_string() + " * " + v.algebra().name(i);
  }
  return out.empty() ? "0" : out;
}

namespace {

template <typename Terms, typename Render>
std::string join_terms(const Terms& terms, const char* sep, const char* tail, Render render) {
  if (terms.empty()) return std::string("0") + tail;
  std::string out;
  bool first = true;
  for (const auto& term : terms) {
    if (!first) out += sep;
    first = false;
    out += render(term);
  }
  return out + tail;
}

}  // namespace

std::string format_env_lines(const EnvElement& u) {
  return join_terms(u.terms(), "\n", "\n", [&](const auto& t) {
    return t.second.to_string() + " * " + format_word(u.algebra(), t.first);
  });
}

std::string format_env_inline(const EnvElement& u) {
  return join_terms(u.terms(), " + ", "", [&](const auto& t) {
    return t.second.to_string() + " * " + format_word(u.algebra(), t.first);
  });
}

std::string format_state_lines(const StateElement& s) {
  return join_terms(s.terms(), "\n", "\n", [&](const auto& t) {
    return t.second.to_string() + " * " + format_word(s.algebra(), t.first.first) + " (x) " +
           format_word(s.algebra(), t.first.second);
  });
}

std::string format_state_inline(const StateElement& s) {
  return join_terms(s.terms(), " + ", "", [&](const auto& t) {
    return t.second.to_string() + " * " + format_word(s.algebra(), t.first.first) + " (x) " +
           format_word(s.algebra(), t.first.second);
  });
}

}  // namespace envord
