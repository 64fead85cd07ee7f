// Command line front-end: Monte Carlo sweeps, CSAT traces and array
// null-depth diagnostics.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "coexnull/emit.hpp"
#include "coexnull/error.hpp"
#include "coexnull/harness.hpp"

namespace {

using namespace coexnull;

struct CommonOptions {
  std::string config_path;
  std::optional<int> runs;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::vector<std::string> policies;
  std::vector<std::string> methods;
};

ExperimentConfig resolve(const CommonOptions& o) {
  ExperimentConfig c = o.config_path.empty() ? ExperimentConfig{}
                                             : load_config_file(o.config_path);
  if (o.runs) c.runs = *o.runs;
  if (o.seed) c.base_seed = *o.seed;
  if (o.out) c.output_path = *o.out;
  if (o.format) c.format = *o.format;
  if (!o.policies.empty()) {
    c.policies.clear();
    for (const auto& p : o.policies) c.policies.push_back(policy_from_string(p));
  }
  if (!o.methods.empty()) {
    c.methods.clear();
    for (const auto& m : o.methods) c.methods.push_back(method_from_string(m));
  }
  c.validate();
  return c;
}

void write_to(const std::filesystem::path& dir, const std::string& name,
              const std::function<void(std::ostream&)>& body) {
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  body(out);
  out.flush();
  if (!out) throw Error("failed writing '" + path.string() + "'");
  std::cout << path.string() << '\n';
}

int run_sweep_command(const CommonOptions& o) {
  const ExperimentConfig config = resolve(o);
  const SweepResult results = run_sweep(config);
  for (const auto& path : emit(results, config.output_path, config.format)) {
    std::cout << path.string() << '\n';
  }
  return 0;
}

int run_csat_command(const CommonOptions& o, const std::vector<int>& ncs, int steps) {
  const ExperimentConfig config = resolve(o);
  write_to(config.output_path, "csat.csv", [&](std::ostream& out) {
    write_csat_csv(out, config.radio, ncs, steps);
  });
  return 0;
}

int run_null_depth_command(const CommonOptions& o, const std::vector<int>& Ks) {
  const ExperimentConfig config = resolve(o);
  const auto rows = null_depth_survey(Ks, config.runs, config.base_seed);
  write_to(config.output_path, "null_depth.csv",
           [&](std::ostream& out) { write_null_depth_csv(out, rows); });
  return 0;
}

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--config", o.config_path, "JSON experiment description")
      ->check(CLI::ExistingFile);
  cmd->add_option("--runs", o.runs, "Monte Carlo runs per cell");
  cmd->add_option("--seed", o.seed, "Base RNG seed");
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--policy", o.policies, "MaxSum, MaxLTE or MaxWiFi (repeatable)");
  cmd->add_option("--method", o.methods, "NONULL, GREEDY or EXHAUSTIVE (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LTE-U/WiFi coexistence simulator with interference nulling"};
  app.require_subcommand(1);

  CommonOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Run the Monte Carlo experiment sweep");
  add_common(sweep, sweep_opts);

  CommonOptions csat_opts;
  std::vector<int> ncs(10);
  std::iota(ncs.begin(), ncs.end(), 1);
  int steps = 20;
  auto* csat = app.add_subcommand("csat", "Export CSAT on-period adaptation traces");
  add_common(csat, csat_opts);
  csat->add_option("--ncs", ncs, "Sensed WiFi node counts")->capture_default_str();
  csat->add_option("--steps", steps, "Adaptation steps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CommonOptions depth_opts;
  std::vector<int> Ks{2, 4, 6, 10};
  auto* depth = app.add_subcommand("null-depth", "Survey LCMV null depth and peak gain");
  add_common(depth, depth_opts);
  depth->add_option("--K", Ks, "Antenna counts")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) return run_sweep_command(sweep_opts);
    if (*csat) return run_csat_command(csat_opts, ncs, steps);
    if (*depth) return run_null_depth_command(depth_opts, Ks);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
