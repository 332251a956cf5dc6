#include "twostate/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "twostate/aggregate.hpp"
#include "twostate/errors.hpp"

namespace twostate {
namespace {

constexpr double kEdgeProximity = 1e-6;
constexpr double kFlatSpread = 1e-14;

// 2 nu / (1 + nu^2)^2: decay-model interference factor p''_{2w} with nu = 2w/gamma.
double decay_interference(double nu) {
  const double d = 1.0 + nu * nu;
  return 2.0 * nu / (d * d);
}

void check_bracket(double lo, double hi) {
  detail::require_finite(lo, "bracket lo");
  detail::require_finite(hi, "bracket hi");
  if (lo < 0.0) throw InvalidInput("bracket lo must be non-negative");
  if (!(lo < hi)) throw InvalidInput("bracket must satisfy lo < hi");
}

OptimumReport search_omega(const std::function<double(double)>& q_star, double delta,
                           double lo, double hi) {
  const double tol = 1e-10 * (hi - lo);
  const auto m = golden_section_maximize(q_star, lo, hi, tol);

  OptimumReport report;
  report.delta_used = delta;
  report.iterations = m.iterations;
  report.residual = m.width;
  report.tolerance = tol;
  if (m.value - m.lowest_probe <= kFlatSpread * std::max(1.0, std::abs(m.value))) {
    report.argmax = lo;
    report.q_star_max = q_star(lo);
    report.status = OptimumStatus::flat;
    return report;
  }
  report.argmax = m.argmax;
  report.q_star_max = m.value;
  if (m.argmax - lo < kEdgeProximity || hi - m.argmax < kEdgeProximity) {
    report.status = OptimumStatus::at_bracket_edge;
  }
  return report;
}

}  // namespace

RootResult bisect(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                  double f_tol, int max_iterations) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (!(std::isfinite(f_lo) && std::isfinite(f_hi))) {
    throw NumericalFailure("bisect: function not finite at bracket ends");
  }
  if ((f_lo < 0.0) == (f_hi < 0.0)) {
    throw InvalidInput("bisect: bracket does not straddle a sign change");
  }
  RootResult r;
  while (r.iterations < max_iterations) {
    ++r.iterations;
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    r.root = mid;
    r.residual = std::abs(f_mid);
    if (f_mid == 0.0) {
      r.width = 0.0;
      return r;
    }
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
    r.width = hi - lo;
    const bool exhausted = !(lo < 0.5 * (lo + hi) && 0.5 * (lo + hi) < hi);
    if ((r.width < x_tol && r.residual < f_tol) || exhausted) return r;
  }
  throw NumericalFailure("bisect: iteration limit reached");
}

MaximumResult golden_section_maximize(const std::function<double(double)>& f, double lo,
                                      double hi, double x_tol, int max_iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);

  MaximumResult r;
  r.lowest_probe = std::min(fc, fd);
  while (b - a > x_tol) {
    if (r.iterations >= max_iterations) {
      throw NumericalFailure("golden section: iteration limit reached");
    }
    ++r.iterations;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      r.lowest_probe = std::min(r.lowest_probe, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      r.lowest_probe = std::min(r.lowest_probe, fd);
    }
    if (!(std::isfinite(fc) && std::isfinite(fd))) {
      throw NumericalFailure("golden section: objective not finite");
    }
  }
  r.width = b - a;
  if (fc >= fd) {
    r.argmax = c;
    r.value = fc;
  } else {
    r.argmax = d;
    r.value = fd;
  }
  return r;
}

std::string_view to_string(OptimumStatus status) noexcept {
  switch (status) {
    case OptimumStatus::converged:
      return "converged";
    case OptimumStatus::at_bracket_edge:
      return "at_bracket_edge";
    case OptimumStatus::flat:
      return "flat";
  }
  return "unknown";
}

bool certify_local_max(const std::function<double(double)>& f, double x, double fx,
                       double rel) {
  return f(x * (1.0 - rel)) <= fx && f(x * (1.0 + rel)) <= fx;
}

OptimumReport step_model_optimum() {
  constexpr double tol = 1e-12;
  const auto root = bisect([](double x) { return std::tan(x) - 2.0 * x; }, 0.1, 1.55, tol, tol);
  const double s = std::sin(root.root);

  OptimumReport report;
  report.argmax = root.root;
  report.q_star_max = 1.0 + s * s / root.root;
  report.delta_used = std::numbers::pi / 2.0;
  report.iterations = root.iterations;
  report.residual = root.residual;
  report.tolerance = tol;
  return report;
}

OptimumReport decay_model_optimum() {
  const double nu = 1.0 / std::sqrt(3.0);
  const double q_star = 1.0 + 3.0 * std::sqrt(3.0) / 8.0;

  constexpr double lo = 0.01;
  constexpr double hi = 5.0;
  const auto check = golden_section_maximize(decay_interference, lo, hi, 1e-10 * (hi - lo));
  const double value_gap = std::abs(1.0 + check.value - q_star);
  if (value_gap > 1e-8 || std::abs(check.argmax - nu) > 1e-6) {
    throw NumericalFailure("decay optimum: golden-section pass disagrees with closed form");
  }

  OptimumReport report;
  report.argmax = nu;
  report.q_star_max = q_star;
  report.delta_used = std::numbers::pi / 2.0;
  report.iterations = check.iterations;
  report.residual = value_gap;
  report.tolerance = 1e-8;
  return report;
}

OptimumReport maximize_q_star(const ActivityProfile& profile, double delta, double omega_lo,
                              double omega_hi, double q12_ratio) {
  check_bracket(omega_lo, omega_hi);
  detail::require_finite(delta, "delta");
  if (q12_ratio < 0.0 || q12_ratio > 1.0) throw InvalidInput("q12 ratio must lie in [0, 1]");
  return search_omega(
      [&](double omega) {
        return scaled_symmetric(q12_ratio, profile, ExchangeFrequency(omega), delta);
      },
      delta, omega_lo, omega_hi);
}

OptimumReport maximize_q_star(const CapacityOperator& op, const ActivityProfile& profile,
                              double omega_lo, double omega_hi) {
  check_bracket(omega_lo, omega_hi);
  return search_omega(
      [&](double omega) {
        return aggregate_product(op, profile, ExchangeFrequency(omega)).q_star;
      },
      op.delta(), omega_lo, omega_hi);
}

}  // namespace twostate
