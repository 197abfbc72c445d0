#pragma once

#include <memory>
#include <utility>

#include "envord/envelope.hpp"

namespace envord {

/// Normal ordering in U(g) = U(g1) (x) U(g2) for a validated algebra and
/// split.
///
/// The core is the action g *_T (t (x) m) of g on T(g1) (x) U(g2), defined by
/// recursion on the left word t:
///
///   g * (1 (x) m)     = p1(g) (x) m  +  1 (x) p2(g) m
///   g * (x t (x) m)   = [g, x] * (t (x) m)  +  x (g * (t (x) m))
///
/// Extending it letter by letter (innermost first) gives the U(g)-module
/// structure, and the section u |-> u * (1 (x) 1) inverts mu_state.
///
/// Intermediate states are never canonicalized; only section() and the
/// equality checks straighten.
class ActionContext {
 public:
  /// Throws ValidationError when the algebra fails validate_algebra.
  explicit ActionContext(std::shared_ptr<const SplitDecomposition> split);

  const SplitDecomposition& split() const noexcept { return *split_; }
  const LieAlgebra& algebra() const noexcept { return split_->algebra(); }

  StateElement act(const GVector& g, const StateElement& s) const;
  StateElement act_basis(BasisIndex g, const StateElement& s) const;
  /// w = l1 ... lk acts as l1 * (l2 * ( ... (lk * s))); the empty word is the
  /// identity.
  StateElement act_word(const Word& w, const StateElement& s) const;

  /// s(u) = u * (1 (x) 1), canonicalized factor-wise.
  StateElement section(const EnvElement& u) const;

  /// section() with an optional cross-check against oracle_normal_order and
  /// mu_state; throws OracleMismatch on disagreement.
  StateElement normal_order(const EnvElement& u, bool cross_check = true) const;

  /// max left degree of g * s <= 1 + max left degree of s.
  bool check_filtration(const GVector& g, const StateElement& s) const;
  /// g * (w1 (x) m) == (g * (w1 (x) 1)) m.
  bool check_right_linearity(const GVector& g, const Word& w1, const Word& m) const;
  /// mu_state(g * s) == g mu_state(s) in U(g).
  bool check_mu_compat(const GVector& g, const StateElement& s) const;
  /// g * (h * s) - h * (g * s) == [g, h] * s in U(g1) (x) U(g2).
  bool check_lie_action(const GVector& g, const GVector& h, const StateElement& s) const;
  /// (section(mu_state(s)) == canon(s), mu_state(section(u)) == u).
  std::pair<bool, bool> check_inverse(const EnvElement& u, const StateElement& s) const;

 private:
  void require_carrier(const StateElement& s) const;
  void require_carrier(const GVector& g) const;
  void require_carrier(const EnvElement& u) const;

  std::shared_ptr<const SplitDecomposition> split_;
};

}  // namespace envord
