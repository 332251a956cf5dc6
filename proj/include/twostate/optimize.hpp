#pragma once

#include <functional>
#include <string_view>

#include "twostate/core_model.hpp"
#include "twostate/profiles.hpp"

namespace twostate {

struct RootResult {
  double root = 0.0;
  double residual = 0.0;  // |f(root)|
  double width = 0.0;     // final bracket width
  int iterations = 0;
};

/// Bisection on [lo, hi] with f(lo), f(hi) of opposite sign. Stops once the
/// bracket is narrower than x_tol and |f(mid)| < f_tol, or the bracket
/// cannot be halved further in double precision.
RootResult bisect(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                  double f_tol, int max_iterations = 400);

struct MaximumResult {
  double argmax = 0.0;
  double value = 0.0;
  double width = 0.0;
  int iterations = 0;
  double lowest_probe = 0.0;  // smallest value seen, for flatness detection
};

/// Golden-section search for the maximum of f on [lo, hi], stopping when the
/// bracket is narrower than x_tol. Returns the best probed point.
MaximumResult golden_section_maximize(const std::function<double(double)>& f, double lo,
                                      double hi, double x_tol, int max_iterations = 500);

enum class OptimumStatus {
  converged,
  at_bracket_edge,  // argmax within 1e-6 of lo or hi; true maximum may be outside
  flat,             // every probe returned the same Q*
};

std::string_view to_string(OptimumStatus status) noexcept;

/// argmax is x = wT for the step model, nu = 2w/gamma for the decay model and
/// raw w for the generic search.
struct OptimumReport {
  double argmax = 0.0;
  double q_star_max = 0.0;
  double delta_used = 0.0;
  int iterations = 0;
  double residual = 0.0;
  double tolerance = 0.0;
  OptimumStatus status = OptimumStatus::converged;
};

/// Smallest positive root of tan x = 2x, bracketed on [0.1, 1.55], and the
/// matching Q* = 1 + sin^2 x / x at delta = pi/2 with |q12| = q11 = q22.
OptimumReport step_model_optimum();

/// nu = 1/sqrt(3), Q* = 1 + 3 sqrt(3)/8, confirmed by a golden-section pass
/// over 2nu/(1+nu^2)^2. Throws NumericalFailure if the two disagree.
OptimumReport decay_model_optimum();

/// Golden-section maximization of the symmetric-case Q* over w in [omega_lo, omega_hi].
OptimumReport maximize_q_star(const ActivityProfile& profile, double delta, double omega_lo,
                              double omega_hi, double q12_ratio);

/// Two-sided probe: true when f(x (1 +- rel)) <= fx.
bool certify_local_max(const std::function<double(double)>& f, double x, double fx,
                       double rel = 1e-6);

/// Same search for a general (possibly asymmetric) operator.
OptimumReport maximize_q_star(const CapacityOperator& op, const ActivityProfile& profile,
                              double omega_lo, double omega_hi);

}  // namespace twostate
