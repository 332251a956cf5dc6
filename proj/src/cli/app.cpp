#include "twostate/cli/app.hpp"

#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "twostate/errors.hpp"

namespace twostate::cli {
namespace {

struct Flags {
  std::string config_path;
  std::optional<double> q11, q22, q12, delta, T, gamma, omega;
  std::optional<std::string> profile, omega_range, delta_range, model, out, format;
  std::vector<double> bracket;
  bool degrees = false;
  bool dump_config = false;
};

void add_common_options(CLI::App& app, Flags& f) {
  app.add_option("--config", f.config_path, "JSON config file; flags override its values");
  app.add_option("--q11", f.q11, "Diagonal element for the imaginative state (> 0)");
  app.add_option("--q22", f.q22, "Diagonal element for the logical state (> 0)");
  app.add_option("--q12", f.q12, "Modulus of the off-diagonal element");
  app.add_option("--delta", f.delta, "Phase of the off-diagonal element (radians)");
  app.add_option("--profile", f.profile, "step | decay | csv:<path>");
  app.add_option("--T", f.T, "Step profile horizon");
  app.add_option("--gamma", f.gamma, "Decay profile rate");
  app.add_option("--omega", f.omega, "Exchange frequency");
  app.add_option("--omega-range", f.omega_range, "Exchange frequency sweep lo:hi:steps");
  app.add_option("--delta-range", f.delta_range, "Phase sweep lo:hi:steps");
  app.add_option("--bracket", f.bracket, "Search interval for exchange frequency: lo hi")
      ->expected(2);
  app.add_option("--model", f.model, "Closed-form optimum: step | decay");
  app.add_option("--out", f.out, "Write records to this file instead of stdout");
  app.add_option("--format", f.format, "csv | json");
  app.add_flag("--degrees", f.degrees, "Read --delta and --delta-range in degrees");
  app.add_flag("--dump-config", f.dump_config, "Print the resolved config as JSON and exit");
}

RunConfig resolve(const Flags& f) {
  RunConfig c;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw InvalidInput("config: cannot open '" + f.config_path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidInput(std::string("config: ") + e.what());
    }
    c = config_from_json(j);
  }
  const double angle = f.degrees ? std::numbers::pi / 180.0 : 1.0;
  if (f.q11) c.q11 = *f.q11;
  if (f.q22) c.q22 = *f.q22;
  if (f.q12) c.q12 = *f.q12;
  if (f.delta) c.delta = *f.delta * angle;
  if (f.profile) c.profile = *f.profile;
  if (f.T) c.T = *f.T;
  if (f.gamma) c.gamma = *f.gamma;
  if (f.omega) c.omega = *f.omega;
  if (f.omega_range) c.omega_range = parse_range(*f.omega_range, "omega-range");
  if (f.delta_range) {
    auto r = parse_range(*f.delta_range, "delta-range");
    r.lo *= angle;
    r.hi *= angle;
    c.delta_range = r;
  }
  if (f.bracket.size() == 2) c.bracket = Bracket{f.bracket[0], f.bracket[1]};
  if (f.model) c.model = *f.model;
  if (f.out) c.out = *f.out;
  if (f.format) {
    if (*f.format == "csv") {
      c.format = OutputFormat::csv;
    } else if (*f.format == "json") {
      c.format = OutputFormat::json;
    } else {
      throw InvalidInput("format: expected csv or json, got '" + *f.format + "'");
    }
  }
  c.validate();
  return c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-state interference model: aggregate product evaluation, sweeps and optima",
               "twostate"};
  Flags flags;
  add_common_options(app, flags);
  auto* eval = app.add_subcommand("eval", "Evaluate one configuration");
  auto* sweep = app.add_subcommand("sweep", "Evaluate an omega-major grid over omega and/or delta");
  auto* optimize = app.add_subcommand("optimize", "Maximize Q* over the exchange frequency");
  auto* check = app.add_subcommand("check", "Run the invariant and oracle suite on a config");
  for (auto* sub : {eval, sweep, optimize, check}) sub->fallthrough();
  app.require_subcommand(0, 1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    const RunConfig config = resolve(flags);
    if (flags.dump_config) {
      out << to_json(config).dump(2) << '\n';
      return kExitOk;
    }
    if (app.get_subcommands().empty()) {
      err << "error: expected a subcommand (eval, sweep, optimize, check)\n";
      return kExitConfigError;
    }

    std::ostringstream buffer;
    int code = kExitOk;
    if (eval->parsed()) {
      code = cmd_eval(config, buffer);
    } else if (sweep->parsed()) {
      code = cmd_sweep(config, buffer);
    } else if (optimize->parsed()) {
      code = cmd_optimize(config, buffer);
    } else {
      code = cmd_check(config, buffer);
    }
    if (config.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file) throw InvalidInput("out: cannot open '" + config.out + "' for writing");
      file << buffer.str();
    }
    return code;
  } catch (const InvalidInput& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  }
}

}  // namespace twostate::cli
