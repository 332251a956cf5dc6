#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace twostate {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  int max_depth = 50;
  std::int64_t max_evaluations = 50'000'000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Simpson on [a, b] with interval bisection and Richardson
/// correction. Throws NumericalFailure when max_depth or max_evaluations is
/// exhausted before the local error test passes.
QuadratureResult adaptive_simpson(const Integrand& f, double a, double b,
                                  const QuadratureOptions& opts = {});

/// Integrates over consecutive panels [nodes[i], nodes[i+1]], splitting the
/// absolute tolerance in proportion to panel length.
QuadratureResult integrate_panels(const Integrand& f, std::span<const double> nodes,
                                  const QuadratureOptions& opts = {});

/// Sorted breakpoints covering [a, b]: the endpoints, every interior entry of
/// `fixed` and enough extra points that no panel is longer than pi/omega
/// (omega == 0 adds none).
std::vector<double> oscillatory_nodes(double a, double b, double omega,
                                      std::span<const double> fixed = {});

}  // namespace twostate
