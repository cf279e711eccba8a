// Command-line front end: solve, verify, oracle, list-presets.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semiinf/errors.hpp"
#include "semiinf/oracle.hpp"
#include "semiinf/report.hpp"

namespace {

using namespace semiinf;

// Flags shared by `solve` and `verify`, kept in declaration order.
struct RunFlags {
  std::string config;
  std::vector<std::pair<std::string, std::optional<std::string>>> values;

  void attach(CLI::App* app) {
    app->add_option("--config", config, "key=value configuration file")->check(CLI::ExistingFile);
    const std::pair<const char*, const char*> keys[] = {
        {"preset", "--preset"},           {"problem", "--problem"},
        {"method", "--method"},           {"n", "--n"},
        {"alpha", "--alpha"},             {"scale-L", "--scale-L,--L"},
        {"map-k", "--map-k,--k"},         {"mesh-h", "--mesh-h,--h"},
        {"seed-lambda", "--seed-lambda"}, {"seed-beta", "--seed-beta"},
        {"b1", "--b1"},                   {"b2", "--b2"},
        {"b3", "--b3"},                   {"cone-lambda", "--cone-lambda"},
        {"abscissas", "--abscissas"},     {"out", "--out"},
        {"tol", "--tol"}};
    values.reserve(std::size(keys));
    for (const auto& [key, names] : keys) {
      values.emplace_back(key, std::nullopt);
      auto& slot = values.back().second;
      app->add_option_function<std::string>(names, [&slot](const std::string& v) { slot = v; });
    }
  }

  FlagList flags(const std::optional<std::string>& preset_override = std::nullopt) const {
    FlagList out;
    for (const auto& [key, value] : values) {
      if (key == std::string("preset") && preset_override) {
        out.emplace_back(key, *preset_override);
      } else if (value) {
        out.emplace_back(key, *value);
      }
    }
    return out;
  }

  std::string config_text() const {
    if (config.empty()) return "";
    std::ifstream in(config);
    if (!in) throw IoError("cannot read config file '" + config + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Preset group names ("table3") expand to one run per member.
  std::vector<RunConfig> configs() const {
    const std::string text = config_text();
    std::optional<std::string> preset;
    for (const auto& [key, value] : values) {
      if (key == std::string("preset") && value) preset = value;
    }
    if (!preset) {
      const RunConfig probe = parse_config(text, flags());
      if (probe.preset.empty()) return {probe};
      preset = probe.preset;
    }
    std::vector<RunConfig> out;
    for (const auto& name : expand_preset_group(*preset)) out.push_back(parse_config(text, flags(name)));
    return out;
  }
};

std::string label(const RunConfig& cfg) {
  if (!cfg.preset.empty()) return cfg.preset;
  return to_string(*cfg.problem) + "/" + to_string(*cfg.method);
}

void write_table(const RunConfig& cfg, const SolutionTable& table, bool group) {
  if (cfg.out.empty()) {
    if (group) std::cout << "# " << label(cfg) << "\n";
    std::cout << format_csv(table);
    return;
  }
  std::string path = cfg.out;
  if (group) {
    std::filesystem::create_directories(cfg.out);
    path = (std::filesystem::path(cfg.out) / (label(cfg) + ".csv")).string();
  }
  emit_csv(table, path);
}

void summarize(const RunConfig& cfg, const SolutionTable& table) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s: f'(0) = %.9f, iterations = %d, max nodal residual = %.3e\n",
                label(cfg).c_str(), table.slope, table.iterations, table.max_nodal_residual);
  std::cerr << buf;
}

int cmd_solve(const RunFlags& flags) {
  const auto configs = flags.configs();
  for (const auto& cfg : configs) {
    const SolutionTable table = run_case(cfg);
    write_table(cfg, table, configs.size() > 1);
    summarize(cfg, table);
  }
  return kExitOk;
}

int cmd_verify(const RunFlags& flags) {
  bool all = true;
  for (const auto& cfg : flags.configs()) {
    const SolutionTable table = run_case(cfg);
    if (!cfg.out.empty()) emit_csv(table, cfg.out);
    const VerifyReport report = verify(cfg, table);
    std::cout << "== " << label(cfg) << "\n" << report.to_text();
    all = all && report.pass;
  }
  return all ? kExitOk : kExitVerifyFail;
}

struct OracleFlags {
  std::string problem = "fluid";
  double b1 = 0.6;
  std::optional<double> b2;
  double b3 = 0.5;
  double cone_lambda = 0.0;
  std::optional<double> z_max;
  std::optional<double> step;
};

int cmd_oracle(const OracleFlags& o) {
  Problem problem;
  if (o.problem == "fluid") {
    problem = o.b2 ? FluidParams::direct(o.b1, *o.b2, o.b3) : FluidParams::from_b1_b3(o.b1, o.b3);
  } else if (o.problem == "thomas-fermi" || o.problem == "tf") {
    problem = ThomasFermiParams{};
  } else if (o.problem == "cone") {
    problem = ConeParams{o.cone_lambda};
  } else {
    throw UsageError("unknown problem '" + o.problem + "'");
  }
  ShootConfig cfg = ShootConfig::defaults_for(problem);
  if (o.z_max) cfg.z_max = *o.z_max;
  if (o.step) cfg.step = *o.step;
  const ShootResult r = shoot(problem, cfg);
  std::printf("%s: initial slope = %.10f (%d iterations, z_max = %g, step = %g)\n",
              problem_name(problem).c_str(), r.initial_slope, r.iterations, cfg.z_max, cfg.step);
  return kExitOk;
}

int cmd_list() {
  for (const auto& name : preset_names()) {
    const RunConfig cfg = preset_config(name);
    std::cout << name << "\t" << to_string(*cfg.problem) << "/" << to_string(*cfg.method)
              << " n=" << *cfg.n << "\n";
  }
  std::cout << "groups: table1 table2 table3 table4 table5 table6 table7\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral collocation solvers for boundary-value problems on [0, inf)"};
  // `--h` is the mesh-size alias, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  RunFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Solve a case and write its CSV table");
  solve_flags.attach(solve);

  RunFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "Solve a preset and compare with reference data");
  verify_flags.attach(verify_cmd);

  OracleFlags oracle_flags;
  auto* oracle = app.add_subcommand("oracle", "Initial slope by RK4 shooting");
  oracle->add_option("--problem", oracle_flags.problem, "fluid, thomas-fermi, or cone");
  oracle->add_option("--b1", oracle_flags.b1);
  oracle->add_option("--b2", oracle_flags.b2);
  oracle->add_option("--b3", oracle_flags.b3);
  oracle->add_option("--cone-lambda", oracle_flags.cone_lambda);
  oracle->add_option("--z-max", oracle_flags.z_max);
  oracle->add_option("--step", oracle_flags.step);

  auto* list = app.add_subcommand("list-presets", "List preset names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_flags);
    if (verify_cmd->parsed()) return cmd_verify(verify_flags);
    if (oracle->parsed()) return cmd_oracle(oracle_flags);
    if (list->parsed()) return cmd_list();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigurationError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SolveError& e) {
    std::cerr << "solver failure: " << e.what() << "\nresidual history:";
    for (double h : e.history()) std::cerr << " " << h;
    std::cerr << "\n";
    return kExitSolver;
  } catch (const Error& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitUsage;
}
