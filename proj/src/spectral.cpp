#include "twostate/spectral.hpp"

#include <cmath>
#include <variant>

#include "twostate/errors.hpp"

namespace twostate {
namespace {

void check_omega(double omega) {
  detail::require_finite(omega, "omega");
  if (omega < 0.0) throw InvalidInput("Fourier frequency must be non-negative");
}

FourierCoefficient step_coefficient(const StepProfile& s, double omega) {
  const double x = omega * s.horizon;
  if (std::abs(x) < kStepSmallArgument) return {1.0, 0.0};
  const double half = 0.5 * x;
  const double sin_half = std::sin(half);
  return {std::sin(x) / x, sin_half * sin_half / half};
}

FourierCoefficient decay_coefficient(const DecayProfile& d, double omega) {
  const double r = omega / d.gamma;
  const double r2 = r * r;
  const double denom = (1.0 + r2) * (1.0 + r2);
  return {(1.0 - r2) / denom, 2.0 * r / denom};
}

}  // namespace

FourierCoefficient fourier_coefficient(const ActivityProfile& profile, double omega) {
  check_omega(omega);
  const auto& v = profile.variant();
  if (const auto* s = std::get_if<StepProfile>(&v)) return step_coefficient(*s, omega);
  if (const auto* d = std::get_if<DecayProfile>(&v)) return decay_coefficient(*d, omega);
  return fourier_coefficient_numeric(profile, omega);
}

FourierCoefficient fourier_coefficient_numeric(const ActivityProfile& profile, double omega,
                                               const QuadratureOptions& opts) {
  check_omega(omega);
  const auto fixed = profile.breakpoints();
  const auto nodes =
      oscillatory_nodes(profile.support_begin(), profile.support_end(), omega, fixed);
  const auto re = integrate_panels(
      [&](double t) { return profile.evaluate(t) * std::cos(omega * t); }, nodes, opts);
  if (omega == 0.0) return {re.value, 0.0};
  const auto im = integrate_panels(
      [&](double t) { return profile.evaluate(t) * std::sin(omega * t); }, nodes, opts);
  return {re.value, im.value};
}

}  // namespace twostate
