#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <numbers>
#include <ostream>
#include <thread>

#include "twostate/aggregate.hpp"
#include "twostate/cli/app.hpp"
#include "twostate/errors.hpp"
#include "twostate/optimize.hpp"

namespace twostate::cli {
namespace {

constexpr const char* kRecordHeader =
    "omega,delta,q,q_star,classical_part,asymmetry_term,interference_term";

struct Record {
  double omega;
  double delta;
  AggregateResult result;
};

void write_records(const std::vector<Record>& records, OutputFormat format, bool as_array,
                   std::ostream& out) {
  if (format == OutputFormat::csv) {
    out << kRecordHeader << '\n';
    for (const auto& r : records) {
      out << format_number(r.omega) << ',' << format_number(r.delta) << ','
          << format_number(r.result.q) << ',' << format_number(r.result.q_star) << ','
          << format_number(r.result.classical_part) << ','
          << format_number(r.result.asymmetry_term) << ','
          << format_number(r.result.interference_term) << '\n';
    }
    return;
  }
  auto json = nlohmann::json::array();
  for (const auto& r : records) {
    json.push_back({{"omega", r.omega},
                    {"delta", r.delta},
                    {"q", r.result.q},
                    {"q_star", r.result.q_star},
                    {"classical_part", r.result.classical_part},
                    {"asymmetry_term", r.result.asymmetry_term},
                    {"interference_term", r.result.interference_term}});
  }
  out << (as_array ? json.dump(2) : json.at(0).dump(2)) << '\n';
}

// Fourier coefficients at 2w for every grid frequency, evaluated in parallel
// chunks; the result keeps grid order.
std::vector<FourierCoefficient> coefficients_for(const ActivityProfile& profile,
                                                 const std::vector<double>& omegas) {
  std::vector<FourierCoefficient> coeffs(omegas.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  const std::size_t chunk = (omegas.size() + workers - 1) / workers;
  if (profile.kind() != ProfileKind::tabulated || omegas.size() < 2 * workers) {
    for (std::size_t i = 0; i < omegas.size(); ++i) {
      coeffs[i] = fourier_coefficient(profile, 2.0 * omegas[i]);
    }
    return coeffs;
  }
  std::vector<std::future<void>> jobs;
  for (std::size_t begin = 0; begin < omegas.size(); begin += chunk) {
    const std::size_t end = std::min(omegas.size(), begin + chunk);
    jobs.push_back(std::async(std::launch::async, [&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) {
        coeffs[i] = fourier_coefficient(profile, 2.0 * omegas[i]);
      }
    }));
  }
  for (auto& job : jobs) job.get();
  return coeffs;
}

void write_report(const OptimumReport& report, bool certified, OutputFormat format,
                  std::ostream& out) {
  if (format == OutputFormat::csv) {
    out << "argmax,q_star_max,delta,iterations,residual,tolerance,status,certified\n"
        << format_number(report.argmax) << ',' << format_number(report.q_star_max) << ','
        << format_number(report.delta_used) << ',' << report.iterations << ','
        << format_number(report.residual) << ',' << format_number(report.tolerance) << ','
        << to_string(report.status) << ',' << (certified ? "true" : "false") << '\n';
    return;
  }
  const nlohmann::json json = {{"argmax", report.argmax},
                               {"q_star_max", report.q_star_max},
                               {"delta", report.delta_used},
                               {"iterations", report.iterations},
                               {"residual", report.residual},
                               {"tolerance", report.tolerance},
                               {"status", std::string(to_string(report.status))},
                               {"certified", certified}};
  out << json.dump(2) << '\n';
}

}  // namespace

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return buffer;
}

int cmd_eval(const RunConfig& config, std::ostream& out) {
  config.validate();
  if (config.omega_range || config.delta_range) {
    throw InvalidInput("omega-range/delta-range: eval takes scalar values, use sweep");
  }
  if (!config.omega) throw InvalidInput("omega: required for eval");
  const auto result = aggregate_product(config.capacity_operator(), config.activity_profile(),
                                        ExchangeFrequency(*config.omega));
  write_records({{*config.omega, config.delta, result}}, config.format, false, out);
  return kExitOk;
}

int cmd_sweep(const RunConfig& config, std::ostream& out) {
  config.validate();
  if (!config.omega_range && !config.delta_range) {
    throw InvalidInput("omega-range/delta-range: sweep needs at least one range");
  }
  if (!config.omega_range && !config.omega) throw InvalidInput("omega: required");

  std::vector<double> omegas;
  if (config.omega_range) {
    for (int i = 0; i < config.omega_range->steps; ++i) omegas.push_back(config.omega_range->at(i));
  } else {
    omegas.push_back(*config.omega);
  }
  std::vector<double> deltas;
  if (config.delta_range) {
    for (int i = 0; i < config.delta_range->steps; ++i) deltas.push_back(config.delta_range->at(i));
  } else {
    deltas.push_back(config.delta);
  }

  const auto profile = config.activity_profile();
  const auto coeffs = coefficients_for(profile, omegas);
  std::vector<Record> records;
  records.reserve(omegas.size() * deltas.size());
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    for (double delta : deltas) {
      const CapacityOperator op(config.q11, config.q22, config.q12, delta);
      records.push_back({omegas[i], delta, aggregate_from_coefficient(op, coeffs[i])});
    }
  }
  write_records(records, config.format, true, out);
  return kExitOk;
}

int cmd_optimize(const RunConfig& config, std::ostream& out) {
  config.validate();
  if (config.model == "step") {
    const auto report = step_model_optimum();
    const bool certified = certify_local_max(
        [](double x) { return 1.0 + std::sin(x) * std::sin(x) / x; }, report.argmax,
        report.q_star_max);
    write_report(report, certified, config.format, out);
    return kExitOk;
  }
  if (config.model == "decay") {
    const auto report = decay_model_optimum();
    const bool certified = certify_local_max(
        [](double nu) { return 1.0 + 2.0 * nu / ((1.0 + nu * nu) * (1.0 + nu * nu)); },
        report.argmax, report.q_star_max);
    write_report(report, certified, config.format, out);
    return kExitOk;
  }
  if (!config.bracket) throw InvalidInput("bracket: required unless --model is step or decay");
  const auto op = config.capacity_operator();
  const auto profile = config.activity_profile();
  const auto report = maximize_q_star(op, profile, config.bracket->lo, config.bracket->hi);
  const bool certified = certify_local_max(
      [&](double omega) { return aggregate_product(op, profile, ExchangeFrequency(omega)).q_star; },
      report.argmax, report.q_star_max);
  write_report(report, certified, config.format, out);
  return kExitOk;
}

}  // namespace twostate::cli
