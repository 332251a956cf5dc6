#include <cmath>
#include <ostream>
#include <random>

#include "twostate/aggregate.hpp"
#include "twostate/cli/app.hpp"
#include "twostate/errors.hpp"
#include "twostate/quadrature.hpp"

namespace twostate::cli {
namespace {

struct CheckLine {
  std::string name;
  bool passed;
  double measured;
  double tolerance;
};

// Q by integrating p(t) K(t) over the profile support, bypassing the Fourier route.
double aggregate_by_time_quadrature(const CapacityOperator& op, const ActivityProfile& profile,
                                    ExchangeFrequency freq) {
  const auto nodes = oscillatory_nodes(profile.support_begin(), profile.support_end(),
                                       2.0 * freq.value(), profile.breakpoints());
  QuadratureOptions opts;
  opts.abs_tol = 1e-11 * op.classical_scale();
  return integrate_panels(
             [&](double t) {
               return instantaneous_capacity(op, freq, profile.evaluate(t), t);
             },
             nodes, opts)
      .value;
}

}  // namespace

int cmd_check(const RunConfig& config, std::ostream& out) {
  config.validate();
  const auto op = config.capacity_operator();
  const auto profile = config.activity_profile();

  std::vector<double> omegas;
  if (config.omega_range) {
    const auto& r = *config.omega_range;
    omegas = {r.lo, 0.5 * (r.lo + r.hi), r.hi};
  } else {
    omegas = {config.omega.value_or(1.0)};
  }

  std::vector<CheckLine> lines;
  auto add = [&](std::string name, double measured, double tolerance) {
    lines.push_back({std::move(name), measured <= tolerance, measured, tolerance});
  };

  add("normalization_defect", profile.normalization_defect(), 1e-6);
  {
    const auto nodes = profile.breakpoints();
    const auto area = integrate_panels([&](double t) { return profile.evaluate(t); }, nodes,
                                       {.abs_tol = 1e-12});
    add("support_integral", std::abs(area.value - 1.0),
        profile.kind() == ProfileKind::tabulated ? 1e-6 : 1e-8);
  }

  for (double omega : omegas) {
    const std::string at = "@omega=" + format_number(omega);
    const ExchangeFrequency freq(omega);
    const auto analytic = fourier_coefficient(profile, 2.0 * omega);
    const auto numeric = fourier_coefficient_numeric(profile, 2.0 * omega);
    add("fourier_vs_quadrature" + at,
        std::max(std::abs(analytic.real_part - numeric.real_part),
                 std::abs(analytic.imag_part - numeric.imag_part)),
        1e-8);
    add("fourier_magnitude_bound" + at, std::max(0.0, analytic.magnitude() - 1.0), 1e-12);

    const auto result = aggregate_from_coefficient(op, analytic);
    const double direct = aggregate_by_time_quadrature(op, profile, freq);
    add("aggregate_vs_time_quadrature" + at, std::abs(result.q - direct) / std::abs(direct), 1e-7);
    add("decomposition_sum" + at,
        std::abs(result.q - (result.classical_part + result.asymmetry_term +
                             result.interference_term)) / std::abs(result.q),
        1e-12);

    const auto scaled = aggregate_from_coefficient(op.scaled(3.7), analytic);
    add("scale_invariance" + at, std::abs(scaled.q_star - result.q_star), 1e-12);

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> time(profile.support_begin(), profile.support_end());
    double unitarity = 0.0;
    double sandwich = 0.0;
    for (int i = 0; i < 256; ++i) {
      const double t = time(rng);
      const auto amp = amplitudes_at(freq, t);
      unitarity = std::max(unitarity, std::abs(amp.norm_squared() - 1.0));
      const double k = instantaneous_capacity(op, freq, 1.0, t);
      const auto s = op.sandwich(amp);
      sandwich = std::max({sandwich, std::abs(k - s.real()) / op.classical_scale(),
                           std::abs(s.imag()) / op.classical_scale()});
    }
    add("unitarity" + at, unitarity, 1e-12);
    add("matrix_sandwich" + at, sandwich, 1e-12);
  }

  bool all = true;
  for (const auto& l : lines) all = all && l.passed;
  if (config.format == OutputFormat::json) {
    auto json = nlohmann::json::array();
    for (const auto& l : lines) {
      json.push_back({{"check", l.name},
                      {"passed", l.passed},
                      {"measured", l.measured},
                      {"tolerance", l.tolerance}});
    }
    out << json.dump(2) << '\n';
  } else {
    for (const auto& l : lines) {
      out << (l.passed ? "PASS " : "FAIL ") << l.name << " measured=" << format_number(l.measured)
          << " tol=" << format_number(l.tolerance) << '\n';
    }
  }
  return all ? kExitOk : kExitNumericalFailure;
}

}  // namespace twostate::cli
