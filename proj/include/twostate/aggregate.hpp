#pragma once

#include "twostate/core_model.hpp"
#include "twostate/profiles.hpp"
#include "twostate/spectral.hpp"

namespace twostate {

/// Lifetime aggregate Q = classical_part + asymmetry_term + interference_term
/// and its scaled form q_star = Q / classical_part.
struct AggregateResult {
  double q = 0.0;
  double q_star = 0.0;
  double classical_part = 0.0;     // (q11 + q22) / 2
  double asymmetry_term = 0.0;     // (q11 - q22) / 2 * p'_{2w}
  double interference_term = 0.0;  // |q12| * p''_{2w} * sin(delta)
};

/// Assembles the decomposition from a Fourier coefficient already taken at 2w.
AggregateResult aggregate_from_coefficient(const CapacityOperator& op,
                                           const FourierCoefficient& at_twice_omega);

AggregateResult aggregate_product(const CapacityOperator& op, const ActivityProfile& profile,
                                  ExchangeFrequency freq);

/// Q* for q11 == q22: 1 + ratio * p''_{2w} * sin(delta), ratio = |q12|/q11 in [0, 1].
double scaled_symmetric(double q12_ratio, const ActivityProfile& profile,
                        ExchangeFrequency freq, double delta);

/// |q12| * p''_{2w} * sin(delta).
double interference_contribution(const CapacityOperator& op, const ActivityProfile& profile,
                                 ExchangeFrequency freq);

}  // namespace twostate
