#include "envord/normalform.hpp"

#include <optional>
#include <sstream>

#include "envord/error.hpp"

namespace envord {

namespace {

using Terms = StateElement::Terms;

void merge(Terms& into, const Word& left, const Word& right, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.try_emplace(StateElement::Key{left, right}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

// g *_T (t[pos..] (x) m) for one pure tensor t (x) m, memoized on (g, pos).
class PureTensorAction {
 public:
  PureTensorAction(const SplitDecomposition& split, const Word& left, const Word& right)
      : split_(split),
        alg_(split.algebra()),
        left_(left),
        right_(right),
        memo_(alg_.dimension() * (left.degree() + 1)) {}

  const Terms& operator()(BasisIndex g, std::size_t pos) {
    std::optional<Terms>& slot = memo_[g * (left_.degree() + 1) + pos];
    if (slot) return *slot;

    Terms out;
    const Scalar one = Scalar::one(alg_.ring());
    if (pos == left_.degree()) {
      if (split_.part_of(g) == Part::First)
        merge(out, Word{g}, right_, one);
      else
        merge(out, Word{}, right_.prepend(g), one);
    } else {
      const Letter x = left_[pos];
      for (const auto& [k, c] : alg_.bracket_basis(g, x))
        for (const auto& [key, a] : (*this)(k, pos + 1)) merge(out, key.first, key.second, c * a);
      for (const auto& [key, a] : (*this)(g, pos + 1)) merge(out, key.first.prepend(x), key.second, a);
    }
    slot = std::move(out);
    return *slot;
  }

 private:
  const SplitDecomposition& split_;
  const LieAlgebra& alg_;
  const Word& left_;
  const Word& right_;
  std::vector<std::optional<Terms>> memo_;
};

}  // namespace

ActionContext::ActionContext(std::shared_ptr<const SplitDecomposition> split) : split_(std::move(split)) {
  if (!split_) throw std::invalid_argument("null split");
  ValidationReport report = validate_algebra(split_->algebra());
  if (!report.ok()) throw ValidationError("invalid Lie algebra:\n" + report.to_string());
}

void ActionContext::require_carrier(const StateElement& s) const {
  if (&s.split() != split_.get()) throw CarrierMismatch("state element from another split");
}

void ActionContext::require_carrier(const GVector& g) const {
  if (&g.algebra() != &algebra()) throw CarrierMismatch("vector from another algebra");
}

void ActionContext::require_carrier(const EnvElement& u) const {
  if (&u.algebra() != &algebra()) throw CarrierMismatch("envelope element from another algebra");
}

StateElement ActionContext::act_basis(BasisIndex g, const StateElement& s) const {
  require_carrier(s);
  StateElement out(*split_);
  for (const auto& [key, c] : s.terms()) {
    PureTensorAction action(*split_, key.first, key.second);
    for (const auto& [k2, a] : action(g, 0)) out.accumulate(k2.first, k2.second, c * a);
  }
  return out;
}

StateElement ActionContext::act(const GVector& g, const StateElement& s) const {
  require_carrier(g);
  require_carrier(s);
  StateElement out(*split_);
  for (const auto& [k, gk] : g.sparse()) out += gk * act_basis(k, s);
  return out;
}

StateElement ActionContext::act_word(const Word& w, const StateElement& s) const {
  require_carrier(s);
  StateElement out = s;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (*it >= algebra().dimension()) throw CarrierMismatch("letter outside the basis");
    out = act_basis(*it, out);
  }
  return out;
}

StateElement ActionContext::section(const EnvElement& u) const {
  require_carrier(u);
  // act_word(w, 1 (x) 1) for every suffix of every word, shared across terms.
  std::map<Word, StateElement> cache;
  cache.emplace(Word{}, StateElement::unit(*split_));
  auto on_unit = [&](const Word& w) -> const StateElement& {
    std::size_t known = w.degree();
    while (!cache.contains(w.subword(w.degree() - known, known))) --known;
    for (; known < w.degree(); ++known) {
      const std::size_t start = w.degree() - known - 1;
      const StateElement& tail = cache.at(w.subword(start + 1, known));
      cache.emplace(w.subword(start, known + 1), act_basis(w[start], tail));
    }
    return cache.at(w);
  };

  StateElement out(*split_);
  for (const auto& [w, c] : u.terms()) out += c * on_unit(w);
  return state_canon(out);
}

StateElement ActionContext::normal_order(const EnvElement& u, bool cross_check) const {
  StateElement result = section(u);
  if (!cross_check) return result;
  const StateElement oracle = oracle_normal_order(u, *split_);
  if (!state_eq(result, oracle)) throw OracleMismatch("section disagrees with the straightening oracle");
  if (!env_eq(mu_state(result), u)) throw OracleMismatch("mu_state(section(u)) differs from u");
  return result;
}

bool ActionContext::check_filtration(const GVector& g, const StateElement& s) const {
  if (s.is_zero()) return true;
  return act(g, s).max_left_degree() <= 1 + s.max_left_degree();
}

bool ActionContext::check_right_linearity(const GVector& g, const Word& w1, const Word& m) const {
  const StateElement lhs = act(g, StateElement::pure(*split_, w1, m));
  const StateElement rhs = act(g, StateElement::pure(*split_, w1, Word{})).right_multiply(m);
  return state_eq(lhs, rhs);
}

bool ActionContext::check_mu_compat(const GVector& g, const StateElement& s) const {
  return env_eq(mu_state(act(g, s)), EnvElement::from_vector(g) * mu_state(s));
}

bool ActionContext::check_lie_action(const GVector& g, const GVector& h, const StateElement& s) const {
  const StateElement lhs = act(g, act(h, s)) - act(h, act(g, s));
  return state_eq(lhs, act(bracket(g, h), s));
}

std::pair<bool, bool> ActionContext::check_inverse(const EnvElement& u, const StateElement& s) const {
  const bool left = state_eq(section(mu_state(s)), state_canon(s));
  const bool right = env_eq(mu_state(section(u)), u);
  return {left, right};
}

}  // namespace envord
