#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "twostate/core_model.hpp"
#include "twostate/profiles.hpp"

namespace twostate::cli {

/// Inclusive grid lo, lo + h, ..., hi with `steps` points.
struct SweepRange {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;

  double at(int i) const;
  bool operator==(const SweepRange&) const = default;
};

/// Parses "lo:hi:steps". Throws InvalidInput naming `field`.
SweepRange parse_range(std::string_view text, std::string_view field);

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const Bracket&) const = default;
};

enum class OutputFormat { csv, json };

/// Flat run configuration. Angles are radians. Every field maps 1:1 onto a
/// command-line flag and onto a key of the JSON config file:
///
///   q11 q22 q12 delta profile T gamma omega omega_range delta_range
///   bracket model out format
///
/// Ranges serialize as [lo, hi, steps], bracket as [lo, hi]; absent
/// optionals are omitted.
struct RunConfig {
  double q11 = 1.0;
  double q22 = 1.0;
  double q12 = 1.0;
  double delta = 1.5707963267948966;
  std::string profile = "step";  // step | decay | csv:<path>
  double T = 1.0;
  double gamma = 1.0;
  std::optional<double> omega;
  std::optional<SweepRange> omega_range;
  std::optional<SweepRange> delta_range;
  std::optional<Bracket> bracket;
  std::string model;  // optimize only: "", "step" or "decay"
  std::string out;    // empty means stdout
  OutputFormat format = OutputFormat::csv;

  bool operator==(const RunConfig&) const = default;

  /// Cross-field validation; throws InvalidInput naming the offending field.
  void validate() const;

  CapacityOperator capacity_operator() const;
  ActivityProfile activity_profile() const;
};

nlohmann::json to_json(const RunConfig& config);
/// Unknown keys are rejected so typos do not silently fall back to defaults.
RunConfig config_from_json(const nlohmann::json& j);

}  // namespace twostate::cli
