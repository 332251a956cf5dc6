#include "twostate/quadrature.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>

#include "twostate/errors.hpp"

namespace twostate {
namespace {

struct SimpsonState {
  const Integrand& f;
  const QuadratureOptions& opts;
  std::int64_t evaluations = 0;
  double error = 0.0;

  double eval(double x) {
    if (++evaluations > opts.max_evaluations) {
      throw NumericalFailure("adaptive Simpson: evaluation budget exhausted");
    }
    const double y = f(x);
    if (!std::isfinite(y)) {
      throw NumericalFailure("adaptive Simpson: integrand is not finite at x = " +
                             std::to_string(x));
    }
    return y;
  }

  // fa, fm, fb are f at a, (a+b)/2, b; whole is the Simpson estimate on [a, b].
  double refine(double a, double b, double fa, double fm, double fb, double whole,
                double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double both = left + right;
    const double delta = both - whole;

    const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() *
                            (std::abs(left) + std::abs(right));
    if (std::abs(delta) <= 15.0 * tol || std::abs(delta) <= roundoff) {
      error += std::abs(delta) / 15.0;
      return both + delta / 15.0;
    }
    if (depth >= opts.max_depth || !(a < lm && rm < b)) {
      throw NumericalFailure("adaptive Simpson: tolerance unreachable at max depth on [" +
                             std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

QuadratureResult adaptive_simpson(const Integrand& f, double a, double b,
                                  const QuadratureOptions& opts) {
  detail::require_finite(a, "lower limit");
  detail::require_finite(b, "upper limit");
  if (!(opts.abs_tol > 0.0)) throw InvalidInput("abs_tol must be positive");
  if (a == b) return {};
  if (b < a) {
    auto r = adaptive_simpson(f, b, a, opts);
    r.value = -r.value;
    return r;
  }
  SimpsonState state{f, opts};
  const double fa = state.eval(a);
  const double fm = state.eval(0.5 * (a + b));
  const double fb = state.eval(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double value = state.refine(a, b, fa, fm, fb, whole, opts.abs_tol, 0);
  return {value, state.error, state.evaluations};
}

QuadratureResult integrate_panels(const Integrand& f, std::span<const double> nodes,
                                  const QuadratureOptions& opts) {
  QuadratureResult total;
  if (nodes.size() < 2) return total;
  const double span = nodes.back() - nodes.front();
  if (!(span > 0.0)) return total;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    QuadratureOptions panel = opts;
    panel.abs_tol = opts.abs_tol * (nodes[i + 1] - nodes[i]) / span;
    panel.max_evaluations = opts.max_evaluations - total.evaluations;
    const auto r = adaptive_simpson(f, nodes[i], nodes[i + 1], panel);
    total.value += r.value;
    total.error_estimate += r.error_estimate;
    total.evaluations += r.evaluations;
  }
  return total;
}

std::vector<double> oscillatory_nodes(double a, double b, double omega,
                                      std::span<const double> fixed) {
  detail::require_finite(a, "lower limit");
  detail::require_finite(b, "upper limit");
  detail::require_finite(omega, "omega");
  if (b < a) throw InvalidInput("oscillatory_nodes: b < a");

  std::vector<double> coarse{a};
  for (double x : fixed) {
    if (x > a && x < b) coarse.push_back(x);
  }
  coarse.push_back(b);
  std::sort(coarse.begin(), coarse.end());
  coarse.erase(std::unique(coarse.begin(), coarse.end()), coarse.end());

  const double max_len = omega > 0.0 ? std::numbers::pi / omega : 0.0;
  std::vector<double> nodes{coarse.front()};
  for (std::size_t i = 0; i + 1 < coarse.size(); ++i) {
    const double lo = coarse[i];
    const double hi = coarse[i + 1];
    std::size_t pieces = 1;
    if (max_len > 0.0) {
      pieces = static_cast<std::size_t>(std::ceil((hi - lo) / max_len));
      pieces = std::max<std::size_t>(pieces, 1);
    }
    for (std::size_t k = 1; k < pieces; ++k) {
      nodes.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(pieces));
    }
    nodes.push_back(hi);
  }
  return nodes;
}

}  // namespace twostate
