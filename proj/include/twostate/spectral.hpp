#pragma once

#include <complex>

#include "twostate/profiles.hpp"
#include "twostate/quadrature.hpp"

namespace twostate {

/// p_w = integral of p(t) e^{iwt} dt, split into real (p') and imaginary (p'') parts.
struct FourierCoefficient {
  double real_part = 0.0;
  double imag_part = 0.0;

  std::complex<double> value() const { return {real_part, imag_part}; }
  double magnitude() const { return std::abs(value()); }
};

/// Below this |wT| the step coefficient takes its w -> 0 limit (1, 0).
inline constexpr double kStepSmallArgument = 1e-8;

/// Closed form for step and decay profiles, adaptive quadrature (absolute
/// tolerance 1e-10) for tabulated ones.
FourierCoefficient fourier_coefficient(const ActivityProfile& profile, double omega);

/// Panel-split adaptive Simpson of p(t) cos wt and p(t) sin wt over the
/// profile support, regardless of profile kind. Panels never exceed pi/w.
FourierCoefficient fourier_coefficient_numeric(const ActivityProfile& profile, double omega,
                                               const QuadratureOptions& opts = {});

}  // namespace twostate
