#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "frde/adversary.hpp"
#include "frde/bounds.hpp"
#include "frde/graph.hpp"
#include "frde/params.hpp"
#include "frde/protocol.hpp"
#include "frde/sensing.hpp"

namespace frde {

/// Admission failure: the scenario violates a standing requirement
/// (connectivity, global observability, parameter certification).
struct ScenarioRejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An observed error norm exceeded its theoretical envelope. This falsifies
/// either the implementation or the certification, so the run aborts.
struct EnvelopeViolation : std::runtime_error {
  EnvelopeViolation(const std::string& msg, long at_round)
      : std::runtime_error(msg), round(at_round) {}
  long round;
};

/// A fully materialized experiment: everything run() needs.
struct Instance {
  Graph graph;
  SensingModel model;
  ParameterSpec param;
  FrdeParams params;
  AdversarySet adversaries;               // empty members = honest run
  std::optional<AttackStrategy> attack;   // required iff adversaries nonempty
  NoiseMode noise_mode = NoiseMode::UniformBall;
  long rounds = 0;
  std::uint64_t seed = 0;
  bool record_estimates = true;
};

struct TraceRow {
  long t = 0;
  double gamma = 0.0;
  double w = 0.0;
  std::optional<double> z;
  double err_global = 0.0;
  double err_normal = 0.0;
  bool detected = false;  // some normal agent holds an Attack flag at time t
  int flag_count = 0;
  std::vector<double> agent_err;
  std::vector<Flag> flags;
};

struct RunInfo {
  int n_agents = 0;
  int m_dim = 0;
  int n_normal = 0;
  FrdeParams params;
  double lambda_min_j = 0.0;
  double lambda_max_j = 0.0;
  double lambda_min_jn = 0.0;  // meaningful only when z_defined
  bool z_defined = false;
  double eta = 0.0;
  double noise_bound = 0.0;
  std::uint64_t seed = 0;
  long rounds = 0;
  double w_limit = 0.0;
  double z_limit = 0.0;        // meaningful only when z_defined
  double gamma_fixed_point = 0.0;
  double theoretical_rho_w = 0.0;  // w_limit / B, well defined for B = 0 too
  double theoretical_rho_z = 0.0;  // z_limit / B, when z_defined
};

struct RunSummary {
  bool detected = false;
  long first_detection_round = -1;
  double final_err_global = 0.0;
  double final_err_normal = 0.0;
  double final_gamma = 0.0;
  double final_w = 0.0;
  std::optional<double> final_z;
  std::optional<double> implied_rho;  // final_err_normal / B when B > 0
};

struct RunTrace {
  RunInfo info;
  std::vector<TraceRow> rows;  // rounds + 1 entries, t = 0 included
  RunSummary summary;
  // Column n of estimates[t] is agent n's estimate at time t (only when
  // the instance asked for estimate recording).
  std::vector<Eigen::MatrixXd> estimates;
};

/// Admits and executes the scenario: measure, exchange (with adversary
/// substitution), flag updates against the current threshold, estimate
/// updates, then the threshold/envelope recursions. Throws ScenarioRejected
/// or EnvelopeViolation; otherwise deterministic per (instance, seed).
RunTrace run(const Instance& instance);

/// Header "t,gamma,W,Z,err_global,err_normal,detected,flag_count"; per-agent
/// error and flag columns appended on request. Z cells are empty when the
/// envelope is undefined.
void emit_csv(const RunTrace& trace, std::ostream& out, bool per_agent_columns = false);
void write_csv(const RunTrace& trace, const std::string& path, bool per_agent_columns = false);

std::string summary_text(const RunTrace& trace);
void write_summary(const RunTrace& trace, const std::string& path);

}  // namespace frde
