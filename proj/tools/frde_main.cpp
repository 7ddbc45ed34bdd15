// frde: scenario-driven simulator for flag-raising distributed estimation.
//
// Subcommands:
//   run <scenario-file>      execute a scenario file
//   builtin <example1..4>    execute a stock experiment
//   params <scenario-file>   report the selected parameters and certificate
//
// Exit codes: 0 clean run, 2 scenario rejected, 3 envelope violation.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "frde/scenario.hpp"
#include "frde/simulation.hpp"

namespace {

struct OutputOptions {
  std::string out_dir;
  std::string format = "summary";  // csv | summary
  bool per_agent = false;
};

int execute(frde::ScenarioConfig cfg, const OutputOptions& opts,
            std::optional<std::uint64_t> seed, std::optional<long> rounds) {
  if (seed) cfg.seed = *seed;
  if (rounds) cfg.rounds = *rounds;

  const frde::Instance instance = frde::build_instance(cfg);
  const frde::RunTrace trace = frde::run(instance);

  if (!opts.out_dir.empty()) {
    std::filesystem::create_directories(opts.out_dir);
    const auto dir = std::filesystem::path(opts.out_dir);
    frde::write_csv(trace, (dir / "trace.csv").string(), opts.per_agent);
    frde::write_summary(trace, (dir / "summary.txt").string());
    std::cout << "wrote " << (dir / "trace.csv").string() << " and "
              << (dir / "summary.txt").string() << "\n";
  } else if (opts.format == "csv") {
    frde::emit_csv(trace, std::cout, opts.per_agent);
  } else {
    std::cout << frde::summary_text(trace);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flag-raising distributed estimation simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string builtin_name;
  std::optional<std::uint64_t> seed;
  std::optional<long> rounds;
  OutputOptions opts;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "master seed override");
    cmd->add_option("--rounds", rounds, "round count override");
    cmd->add_option("--out", opts.out_dir, "directory for trace.csv and summary.txt");
    cmd->add_option("--format", opts.format, "stdout format: csv or summary")
        ->check(CLI::IsMember({"csv", "summary"}));
    cmd->add_flag("--per-agent", opts.per_agent, "include per-agent CSV columns");
  };

  CLI::App* cmd_run = app.add_subcommand("run", "execute a scenario file");
  cmd_run->add_option("scenario", scenario_path, "scenario file")->required();
  add_common(cmd_run);

  CLI::App* cmd_builtin = app.add_subcommand("builtin", "execute a stock experiment");
  cmd_builtin->add_option("name", builtin_name, "example1 .. example4")->required();
  add_common(cmd_builtin);

  CLI::App* cmd_params = app.add_subcommand("params", "report parameter selection");
  cmd_params->add_option("scenario", scenario_path, "scenario file")->required();
  cmd_params->add_option("--seed", seed, "master seed override");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_run->parsed()) {
      return execute(frde::parse_scenario_file(scenario_path), opts, seed, rounds);
    }
    if (cmd_builtin->parsed()) {
      frde::ScenarioConfig cfg =
          frde::builtin_scenario(frde::builtin_by_name(builtin_name), seed.value_or(0));
      return execute(std::move(cfg), opts, std::nullopt, rounds);
    }
    if (cmd_params->parsed()) {
      frde::ScenarioConfig cfg = frde::parse_scenario_file(scenario_path);
      if (seed) cfg.seed = *seed;
      std::cout << frde::params_report(frde::build_instance(cfg));
      return 0;
    }
  } catch (const frde::ScenarioRejected& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const frde::EnvelopeViolation& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
