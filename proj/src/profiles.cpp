#include "twostate/profiles.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string>

#include "twostate/errors.hpp"
#include "twostate/quadrature.hpp"

namespace twostate {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double trapezoid(std::span<const ProfileSample> s) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    sum += 0.5 * (s[i].p + s[i + 1].p) * (s[i + 1].t - s[i].t);
  }
  return sum;
}

double interpolate(std::span<const ProfileSample> s, double t) {
  if (t < s.front().t || t > s.back().t) return 0.0;
  auto hi = std::upper_bound(s.begin(), s.end(), t,
                             [](double x, const ProfileSample& v) { return x < v.t; });
  if (hi == s.end()) return s.back().p;
  auto lo = hi - 1;
  const double w = (t - lo->t) / (hi->t - lo->t);
  return lo->p + w * (hi->p - lo->p);
}

std::string_view trim(std::string_view v) {
  while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
  while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r')) {
    v.remove_suffix(1);
  }
  return v;
}

double parse_number(std::string_view field, std::size_t line, const char* column) {
  field = trim(field);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw InvalidInput("profile CSV line " + std::to_string(line) + ": bad " + column +
                       " value '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

ActivityProfile ActivityProfile::step(double horizon) {
  detail::require_finite(horizon, "T");
  if (!(horizon > 0.0)) throw InvalidInput("T must be positive");
  return ActivityProfile(StepProfile{horizon});
}

ActivityProfile ActivityProfile::decay(double gamma) {
  detail::require_finite(gamma, "gamma");
  if (!(gamma > 0.0)) throw InvalidInput("gamma must be positive");
  return ActivityProfile(DecayProfile{gamma});
}

ActivityProfile ActivityProfile::tabulated(std::vector<ProfileSample> samples) {
  if (samples.size() < 2) throw InvalidInput("tabulated profile needs at least two samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    detail::require_finite(s.t, "t");
    detail::require_finite(s.p, "p");
    if (s.t < 0.0) throw InvalidInput("tabulated profile: t must be non-negative");
    if (s.p < 0.0) throw InvalidInput("tabulated profile: p must be non-negative");
    if (i > 0 && !(s.t > samples[i - 1].t)) {
      throw InvalidInput("tabulated profile: t must be strictly increasing");
    }
  }
  const double area = trapezoid(samples);
  if (!(area > 0.0)) throw InvalidInput("tabulated profile has zero integral");
  for (auto& s : samples) s.p /= area;
  return ActivityProfile(TabulatedProfile{std::move(samples), area - 1.0});
}

ProfileKind ActivityProfile::kind() const noexcept {
  return static_cast<ProfileKind>(data_.index());
}

double ActivityProfile::evaluate(double t) const {
  detail::require_finite(t, "t");
  if (t < 0.0) throw InvalidInput("t must be non-negative");
  return std::visit(
      overloaded{
          [t](const StepProfile& s) { return t <= s.horizon ? 1.0 / s.horizon : 0.0; },
          [t](const DecayProfile& d) { return d.gamma * d.gamma * t * std::exp(-d.gamma * t); },
          [t](const TabulatedProfile& tab) { return interpolate(tab.samples, t); },
      },
      data_);
}

double ActivityProfile::peak_time() const {
  return std::visit(overloaded{
                        [](const StepProfile& s) { return 0.5 * s.horizon; },
                        [](const DecayProfile& d) { return 1.0 / d.gamma; },
                        [](const TabulatedProfile& tab) {
                          auto it = std::max_element(
                              tab.samples.begin(), tab.samples.end(),
                              [](const auto& a, const auto& b) { return a.p < b.p; });
                          return it->t;
                        },
                    },
                    data_);
}

double ActivityProfile::normalization_defect() const {
  if (kind() != ProfileKind::tabulated) return 0.0;
  const auto nodes = breakpoints();
  const auto r = integrate_panels([this](double t) { return evaluate(t); }, nodes,
                                  {.abs_tol = 1e-12});
  return std::abs(r.value - 1.0);
}

double ActivityProfile::support_begin() const {
  if (const auto* tab = std::get_if<TabulatedProfile>(&data_)) return tab->samples.front().t;
  return 0.0;
}

double ActivityProfile::support_end() const {
  return std::visit(overloaded{
                        [](const StepProfile& s) { return s.horizon; },
                        [](const DecayProfile& d) { return kDecayTruncation / d.gamma; },
                        [](const TabulatedProfile& tab) { return tab.samples.back().t; },
                    },
                    data_);
}

std::vector<double> ActivityProfile::breakpoints() const {
  if (const auto* tab = std::get_if<TabulatedProfile>(&data_)) {
    std::vector<double> out;
    out.reserve(tab->samples.size());
    for (const auto& s : tab->samples) out.push_back(s.t);
    return out;
  }
  return {support_begin(), support_end()};
}

std::vector<ProfileSample> parse_profile_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("profile CSV is empty");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  if (trim(line) != "t,p") {
    throw InvalidInput("profile CSV line 1: expected header 't,p'");
  }
  std::vector<ProfileSample> samples;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    const auto comma = view.find(',');
    if (comma == std::string_view::npos || view.find(',', comma + 1) != std::string_view::npos) {
      throw InvalidInput("profile CSV line " + std::to_string(number) +
                         ": expected two comma-separated columns");
    }
    samples.push_back({parse_number(view.substr(0, comma), number, "t"),
                       parse_number(view.substr(comma + 1), number, "p")});
  }
  return samples;
}

ActivityProfile load_profile_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open profile CSV '" + path.string() + "'");
  return ActivityProfile::tabulated(parse_profile_csv(in));
}

std::string_view to_string(ProfileKind kind) noexcept {
  switch (kind) {
    case ProfileKind::step:
      return "step";
    case ProfileKind::decay:
      return "decay";
    case ProfileKind::tabulated:
      return "tabulated";
  }
  return "unknown";
}

}  // namespace twostate
