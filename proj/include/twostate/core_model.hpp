#pragma once

#include <complex>

namespace twostate {

using Complex = std::complex<double>;

/// Rate of coherent exchange between the two reference states, in radians
/// per unit time. Zero is a valid frozen system.
class ExchangeFrequency {
 public:
  explicit ExchangeFrequency(double omega);

  double value() const noexcept { return omega_; }

 private:
  double omega_;
};

/// Superposition weights (c1, c2) over the imaginative and logical states.
struct TwoStateAmplitude {
  Complex c1;
  Complex c2;

  double norm_squared() const noexcept { return std::norm(c1) + std::norm(c2); }
};

/// Positive Hermitian 2x2 observable
///
///   [[q11,              q12_mod e^{i delta}],
///    [q12_mod e^{-i delta}, q22           ]]
///
/// Construction rejects q11 <= 0, q22 <= 0 and q12_mod^2 > q11*q22.
/// delta is reduced into [0, 2pi).
class CapacityOperator {
 public:
  CapacityOperator(double q11, double q22, double q12_mod, double delta);

  double q11() const noexcept { return q11_; }
  double q22() const noexcept { return q22_; }
  double q12_mod() const noexcept { return q12_mod_; }
  double delta() const noexcept { return delta_; }

  Complex q12() const { return std::polar(q12_mod_, delta_); }
  Complex q21() const { return std::conj(q12()); }

  /// (q11 + q22) / 2, the value of the aggregate without any exchange.
  double classical_scale() const noexcept { return 0.5 * (q11_ + q22_); }

  /// Same operator with every matrix element multiplied by factor > 0.
  CapacityOperator scaled(double factor) const;

  /// Expectation value conj(a)^T M a, computed from the explicit matrix.
  Complex sandwich(const TwoStateAmplitude& a) const;

 private:
  double q11_;
  double q22_;
  double q12_mod_;
  double delta_;
};

/// Reduces an angle into [0, 2pi).
double normalize_angle(double radians);

/// Amplitudes at time t for a system starting in the first reference state:
/// c1 = cos(omega t), c2 = -i sin(omega t).
TwoStateAmplitude amplitudes_at(ExchangeFrequency freq, double t);

/// Observable average K(t) = p(t) [ (q11+q22)/2 + (q11-q22)/2 cos 2wt
///                                  + |q12| sin(delta) sin 2wt ]
/// where p_at_t is the activity profile already evaluated at t.
double instantaneous_capacity(const CapacityOperator& op, ExchangeFrequency freq,
                              double p_at_t, double t);

}  // namespace twostate
