#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace twostate {

/// Rectangular window: p(t) = 1/T on [0, T].
struct StepProfile {
  double horizon;
};

/// Gamma-type rise and decay: p(t) = gamma^2 t exp(-gamma t) on [0, inf).
struct DecayProfile {
  double gamma;
};

struct ProfileSample {
  double t;
  double p;
};

/// Linearly interpolated samples, zero outside [t_front, t_back].
struct TabulatedProfile {
  std::vector<ProfileSample> samples;
  /// Trapezoid integral of the raw samples minus one, before renormalization.
  double renormalization_defect = 0.0;
};

enum class ProfileKind { step, decay, tabulated };

/// Decay profiles are truncated here for numerical work: (1+40)e^{-40} < 1e-15.
inline constexpr double kDecayTruncation = 40.0;

/// Normalized activity profile p(t), integral over its support equal to one.
class ActivityProfile {
 public:
  using Variant = std::variant<StepProfile, DecayProfile, TabulatedProfile>;

  static ActivityProfile step(double horizon);
  static ActivityProfile decay(double gamma);
  /// Validates and renormalizes so the trapezoid integral is one.
  static ActivityProfile tabulated(std::vector<ProfileSample> samples);

  ProfileKind kind() const noexcept;
  const Variant& variant() const noexcept { return data_; }

  double evaluate(double t) const;

  /// Step: T/2 by convention. Decay: 1/gamma. Tabulated: first maximal sample.
  double peak_time() const;

  /// |integral of p - 1|; analytic zero for step and decay, adaptive
  /// quadrature of the interpolant for tabulated.
  double normalization_defect() const;

  /// Interval outside which p vanishes (decay truncated at 40/gamma).
  double support_begin() const;
  double support_end() const;

  /// Points where p is not smooth (support edges, tabulated nodes).
  std::vector<double> breakpoints() const;

 private:
  explicit ActivityProfile(Variant data) : data_(std::move(data)) {}

  Variant data_;
};

/// Reads the two-column `t,p` CSV format (header required, LF line endings,
/// `.` decimal separator). Throws InvalidInput naming the offending line.
std::vector<ProfileSample> parse_profile_csv(std::istream& in);
ActivityProfile load_profile_csv(const std::filesystem::path& path);

std::string_view to_string(ProfileKind kind) noexcept;

}  // namespace twostate
