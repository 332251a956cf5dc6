#include "twostate/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include "twostate/errors.hpp"

namespace twostate::cli {
namespace {

double parse_double(std::string_view text, std::string_view field) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw InvalidInput(std::string(field) + ": cannot parse '" + std::string(text) +
                       "' as a number");
  }
  return value;
}

void check_range(const SweepRange& r, std::string_view field) {
  const std::string name(field);
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi)) throw InvalidInput(name + ": bounds must be finite");
  if (r.steps < 2) throw InvalidInput(name + ": steps must be at least 2");
  if (!(r.lo < r.hi)) throw InvalidInput(name + ": lo must be less than hi");
}

template <class T>
T read(const nlohmann::json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(std::string(key) + ": wrong type in config file");
  }
}

}  // namespace

double SweepRange::at(int i) const {
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

SweepRange parse_range(std::string_view text, std::string_view field) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    throw InvalidInput(std::string(field) + ": expected lo:hi:steps, got '" + std::string(text) + "'");
  }
  SweepRange r;
  r.lo = parse_double(text.substr(0, first), field);
  r.hi = parse_double(text.substr(first + 1, second - first - 1), field);
  const auto steps_text = text.substr(second + 1);
  auto [ptr, ec] = std::from_chars(steps_text.data(), steps_text.data() + steps_text.size(), r.steps);
  if (ec != std::errc{} || ptr != steps_text.data() + steps_text.size()) {
    throw InvalidInput(std::string(field) + ": steps must be an integer");
  }
  check_range(r, field);
  return r;
}

void RunConfig::validate() const {
  (void)capacity_operator();
  if (profile != "step" && profile != "decay" && profile.rfind("csv:", 0) != 0) {
    throw InvalidInput("profile: expected step, decay or csv:<path>, got '" + profile + "'");
  }
  if (profile == "csv:") throw InvalidInput("profile: csv: needs a path");
  if (!(T > 0.0) || !std::isfinite(T)) throw InvalidInput("T: must be positive");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw InvalidInput("gamma: must be positive");
  if (omega && (!std::isfinite(*omega) || *omega < 0.0)) {
    throw InvalidInput("omega: must be finite and non-negative");
  }
  if (omega_range) {
    check_range(*omega_range, "omega-range");
    if (omega_range->lo < 0.0) throw InvalidInput("omega-range: lo must be non-negative");
  }
  if (delta_range) check_range(*delta_range, "delta-range");
  if (bracket) {
    if (!std::isfinite(bracket->lo) || !std::isfinite(bracket->hi) || bracket->lo < 0.0 ||
        !(bracket->lo < bracket->hi)) {
      throw InvalidInput("bracket: need 0 <= lo < hi");
    }
  }
  if (!model.empty() && model != "step" && model != "decay") {
    throw InvalidInput("model: expected step or decay, got '" + model + "'");
  }
}

CapacityOperator RunConfig::capacity_operator() const {
  return CapacityOperator(q11, q22, q12, delta);
}

ActivityProfile RunConfig::activity_profile() const {
  if (profile == "step") return ActivityProfile::step(T);
  if (profile == "decay") return ActivityProfile::decay(gamma);
  if (profile.rfind("csv:", 0) == 0) return load_profile_csv(profile.substr(4));
  throw InvalidInput("profile: expected step, decay or csv:<path>, got '" + profile + "'");
}

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j = {
      {"q11", c.q11},       {"q22", c.q22},     {"q12", c.q12},
      {"delta", c.delta},   {"profile", c.profile}, {"T", c.T},
      {"gamma", c.gamma},   {"model", c.model}, {"out", c.out},
      {"format", c.format == OutputFormat::csv ? "csv" : "json"},
  };
  if (c.omega) j["omega"] = *c.omega;
  if (c.omega_range) {
    j["omega_range"] = {c.omega_range->lo, c.omega_range->hi, c.omega_range->steps};
  }
  if (c.delta_range) {
    j["delta_range"] = {c.delta_range->lo, c.delta_range->hi, c.delta_range->steps};
  }
  if (c.bracket) j["bracket"] = {c.bracket->lo, c.bracket->hi};
  return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("config: top level must be a JSON object");
  static const std::set<std::string> known = {
      "q11", "q22", "q12", "delta", "profile", "T", "gamma", "omega",
      "omega_range", "delta_range", "bracket", "model", "out", "format"};
  for (const auto& item : j.items()) {
    if (!known.contains(item.key())) throw InvalidInput(item.key() + ": unknown config key");
  }

  RunConfig c;
  if (j.contains("q11")) c.q11 = read<double>(j, "q11");
  if (j.contains("q22")) c.q22 = read<double>(j, "q22");
  if (j.contains("q12")) c.q12 = read<double>(j, "q12");
  if (j.contains("delta")) c.delta = read<double>(j, "delta");
  if (j.contains("profile")) c.profile = read<std::string>(j, "profile");
  if (j.contains("T")) c.T = read<double>(j, "T");
  if (j.contains("gamma")) c.gamma = read<double>(j, "gamma");
  if (j.contains("omega")) c.omega = read<double>(j, "omega");
  for (const char* key : {"omega_range", "delta_range"}) {
    if (!j.contains(key)) continue;
    const auto v = read<std::vector<double>>(j, key);
    if (v.size() != 3 || v[2] != std::floor(v[2])) {
      throw InvalidInput(std::string(key) + ": expected [lo, hi, steps]");
    }
    SweepRange r{v[0], v[1], static_cast<int>(v[2])};
    (std::string_view(key) == "omega_range" ? c.omega_range : c.delta_range) = r;
  }
  if (j.contains("bracket")) {
    const auto v = read<std::vector<double>>(j, "bracket");
    if (v.size() != 2) throw InvalidInput("bracket: expected [lo, hi]");
    c.bracket = Bracket{v[0], v[1]};
  }
  if (j.contains("model")) c.model = read<std::string>(j, "model");
  if (j.contains("out")) c.out = read<std::string>(j, "out");
  if (j.contains("format")) {
    const auto f = read<std::string>(j, "format");
    if (f == "csv") {
      c.format = OutputFormat::csv;
    } else if (f == "json") {
      c.format = OutputFormat::json;
    } else {
      throw InvalidInput("format: expected csv or json, got '" + f + "'");
    }
  }
  return c;
}

}  // namespace twostate::cli
