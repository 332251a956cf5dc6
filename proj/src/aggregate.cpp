#include "twostate/aggregate.hpp"

#include <cmath>

#include "twostate/errors.hpp"

namespace twostate {

AggregateResult aggregate_from_coefficient(const CapacityOperator& op,
                                           const FourierCoefficient& at_twice_omega) {
  AggregateResult r;
  r.classical_part = op.classical_scale();
  r.asymmetry_term = 0.5 * (op.q11() - op.q22()) * at_twice_omega.real_part;
  r.interference_term = op.q12_mod() * at_twice_omega.imag_part * std::sin(op.delta());
  r.q = r.classical_part + r.asymmetry_term + r.interference_term;
  r.q_star = r.q / r.classical_part;
  return r;
}

AggregateResult aggregate_product(const CapacityOperator& op, const ActivityProfile& profile,
                                  ExchangeFrequency freq) {
  return aggregate_from_coefficient(op, fourier_coefficient(profile, 2.0 * freq.value()));
}

double scaled_symmetric(double q12_ratio, const ActivityProfile& profile,
                        ExchangeFrequency freq, double delta) {
  detail::require_finite(q12_ratio, "q12 ratio");
  detail::require_finite(delta, "delta");
  if (q12_ratio < 0.0 || q12_ratio > 1.0) {
    throw InvalidInput("q12 ratio must lie in [0, 1]");
  }
  const auto coeff = fourier_coefficient(profile, 2.0 * freq.value());
  return 1.0 + q12_ratio * coeff.imag_part * std::sin(delta);
}

double interference_contribution(const CapacityOperator& op, const ActivityProfile& profile,
                                 ExchangeFrequency freq) {
  const auto coeff = fourier_coefficient(profile, 2.0 * freq.value());
  return op.q12_mod() * coeff.imag_part * std::sin(op.delta());
}

}  // namespace twostate
