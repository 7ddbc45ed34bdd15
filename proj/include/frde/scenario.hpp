#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frde/simulation.hpp"

namespace frde {

// Scenario files are plain text with one [section] per concern: [graph] (or
// a raw [edges] block), [sensing], [parameter], [params], [adversary], [run].
// docs/scenarios/ carries a commented example.

struct GraphConfig {
  enum class Kind { EdgeList, RandomGeometric };
  Kind kind = Kind::EdgeList;
  std::optional<Graph> inline_graph;
  int n = 0;                 // random generator only
  double radius = 0.0;
  bool require_connected = true;
  std::vector<int> require_subset_connected;  // explicit ids, 0-based
  std::string require_subset_role;            // or: every agent with this role
  int retry_limit = 1000;
};

struct SensingAssignment {
  int first = 0;  // inclusive agent range, 0-based
  int last = 0;
  std::string role;                       // "xy" | "z" (dim-3 shorthands)
  std::vector<std::vector<double>> rows;  // explicit rows, used when role empty
};

struct SensingConfig {
  double noise_bound = 0.0;
  NoiseMode noise_mode = NoiseMode::UniformBall;
  std::vector<SensingAssignment> assignments;
};

struct ParameterConfig {
  int dim = 0;
  double eta = 0.0;
  std::optional<Eigen::VectorXd> theta;  // absent = uniform draw in the eta-ball
};

struct ParamsConfig {
  enum class Method { Procedure1, Procedure2, Manual };
  Method method = Method::Procedure1;
  double alpha_hat = 1.0;
  double beta_hat = 1.0;
  std::optional<double> kappa1;
  bool use_spectral_bounds = false;  // procedure2 with 4/N^2 and N instead of the spectrum
  double alpha = 0.0;                // manual
  double beta = 0.0;
  double r1 = 0.0;
};

struct AdversaryConfig {
  enum class Strategy { None, NullSpace, FixedOffset, ThresholdRiding, Script };
  std::vector<int> members;  // 0-based
  Strategy strategy = Strategy::None;
  std::optional<Eigen::VectorXd> offset;              // explicit offset
  std::optional<Eigen::VectorXd> saturate_direction;  // offset saturated along this direction
  double ride_fraction = 0.9;
  std::optional<Eigen::VectorXd> ride_direction;
  std::string script_path;
  std::optional<ScriptTable> script;  // wins over script_path when present
};

struct ScenarioConfig {
  GraphConfig graph;
  SensingConfig sensing;
  ParameterConfig parameter;
  ParamsConfig params;
  AdversaryConfig adversary;
  long rounds = 1000;
  std::uint64_t seed = 0;
  bool record_estimates = true;
};

ScenarioConfig parse_scenario_text(const std::string& text);
ScenarioConfig parse_scenario_file(const std::string& path);

enum class BuiltinScenario { Example1, Example2, Example3, Example4 };

/// Accepts "example1".."example4".
BuiltinScenario builtin_by_name(const std::string& name);

/// The four stock experiments: 150 agents in a random geometric network, 50
/// z-sensors among 100 xy-sensors, prior radius 500, noise bound 0.03,
/// procedure-1 parameters. They differ in the adversary set and strategy:
///   example1  none
///   example2  all z-sensors, null-space impersonation (undetectable)
///   example3  35 z-sensors, offset impersonation (detectable)
///   example4  35 z-sensors, threshold riding at 0.9 (undetected, degrading)
ScenarioConfig builtin_scenario(BuiltinScenario which, std::uint64_t seed);

/// Materializes a config: graph generation, sensing assembly, parameter draw,
/// parameter-selection procedure, attack synthesis.
Instance build_instance(const ScenarioConfig& config);

/// Key-value report of the instance parameters, the extreme eigenvalues of J,
/// and the certificate margins.
std::string params_report(const Instance& instance);

}  // namespace frde
