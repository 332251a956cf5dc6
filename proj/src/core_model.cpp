#include "twostate/core_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "twostate/errors.hpp"

namespace twostate {

namespace detail {
void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw InvalidInput(std::string(name) + " must be finite");
  }
}
}  // namespace detail

ExchangeFrequency::ExchangeFrequency(double omega) : omega_(omega) {
  detail::require_finite(omega, "omega");
  if (omega < 0.0) throw InvalidInput("omega must be non-negative");
}

double normalize_angle(double radians) {
  detail::require_finite(radians, "delta");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(radians, two_pi);
  if (r < 0.0) r += two_pi;
  // fmod of a tiny negative number can round up to exactly 2pi.
  if (r >= two_pi) r = 0.0;
  return r;
}

CapacityOperator::CapacityOperator(double q11, double q22, double q12_mod, double delta)
    : q11_(q11), q22_(q22), q12_mod_(q12_mod), delta_(normalize_angle(delta)) {
  detail::require_finite(q11, "q11");
  detail::require_finite(q22, "q22");
  detail::require_finite(q12_mod, "q12");
  if (q11 <= 0.0) throw InvalidInput("q11 must be positive");
  if (q22 <= 0.0) throw InvalidInput("q22 must be positive");
  if (q12_mod < 0.0) throw InvalidInput("q12 (modulus) must be non-negative");
  if (q12_mod * q12_mod > q11 * q22) {
    throw InvalidInput("q12 violates positivity: q12^2 must not exceed q11*q22");
  }
}

CapacityOperator CapacityOperator::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw InvalidInput("scale factor must be positive and finite");
  }
  return CapacityOperator(q11_ * factor, q22_ * factor, q12_mod_ * factor, delta_);
}

Complex CapacityOperator::sandwich(const TwoStateAmplitude& a) const {
  const Complex m1 = q11_ * a.c1 + q12() * a.c2;
  const Complex m2 = q21() * a.c1 + q22_ * a.c2;
  return std::conj(a.c1) * m1 + std::conj(a.c2) * m2;
}

TwoStateAmplitude amplitudes_at(ExchangeFrequency freq, double t) {
  detail::require_finite(t, "t");
  if (t < 0.0) throw InvalidInput("t must be non-negative");
  const double phase = freq.value() * t;
  return {Complex(std::cos(phase), 0.0), Complex(0.0, -std::sin(phase))};
}

double instantaneous_capacity(const CapacityOperator& op, ExchangeFrequency freq,
                              double p_at_t, double t) {
  detail::require_finite(p_at_t, "p");
  detail::require_finite(t, "t");
  if (t < 0.0) throw InvalidInput("t must be non-negative");
  const double twice = 2.0 * freq.value() * t;
  const double bracket = op.classical_scale() +
                         0.5 * (op.q11() - op.q22()) * std::cos(twice) +
                         op.q12_mod() * std::sin(op.delta()) * std::sin(twice);
  return p_at_t * bracket;
}

}  // namespace twostate
