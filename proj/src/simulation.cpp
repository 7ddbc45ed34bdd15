#include "frde/simulation.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace frde {

namespace {

constexpr double kEnvelopeGuard = 1e-12;  // rounding slack on envelope checks

bool is_impersonation(const AttackStrategy& s) {
  return s.kind == AttackKind::NullSpaceImpersonation ||
         s.kind == AttackKind::FixedOffsetImpersonation;
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct ErrorNorms {
  double global = 0.0;
  double normal = 0.0;
  std::vector<double> per_agent;
};

ErrorNorms error_norms(const std::vector<AgentState>& states,
                       const Eigen::VectorXd& theta, const AdversarySet& adv) {
  ErrorNorms e;
  e.per_agent.resize(states.size());
  double sq_global = 0.0, sq_normal = 0.0;
  for (std::size_t n = 0; n < states.size(); ++n) {
    const double sq = (states[n].estimate - theta).squaredNorm();
    e.per_agent[n] = std::sqrt(sq);
    sq_global += sq;
    if (!adv.contains(static_cast<int>(n))) sq_normal += sq;
  }
  e.global = std::sqrt(sq_global);
  e.normal = std::sqrt(sq_normal);
  return e;
}

}  // namespace

RunTrace run(const Instance& instance) {
  const Graph& g = instance.graph;
  const SensingModel& model = instance.model;
  const int n = g.num_vertices();
  const int m = model.m_dim();

  if (model.num_agents() != n)
    throw ScenarioRejected("scenario rejected: sensing model has " +
                           std::to_string(model.num_agents()) + " agents but the graph has " +
                           std::to_string(n));
  if (instance.param.dim() != m)
    throw ScenarioRejected("scenario rejected: parameter dimension mismatch");
  if (instance.rounds < 0)
    throw ScenarioRejected("scenario rejected: negative round count");
  if (!instance.adversaries.empty() && !instance.attack.has_value())
    throw ScenarioRejected("scenario rejected: adversary set given without an attack strategy");

  if (!is_connected(g))
    throw ScenarioRejected("scenario rejected: communication graph is not connected");

  const std::vector<int> everyone = all_agents(g);
  if (!is_globally_observable(model, everyone))
    throw ScenarioRejected("scenario rejected: full agent set is not globally observable");

  const Certificate cert = certify(instance.params, g, model);
  if (!cert.pass()) {
    std::ostringstream msg;
    msg << "scenario rejected: parameters failed certification (lambda_max(J) = "
        << cert.lambda_max << ", lambda_min(J) = " << cert.lambda_min
        << ", r1 = " << instance.params.r1 << ")";
    throw ScenarioRejected(msg.str());
  }

  const AdversarySet& adv = instance.adversaries;
  const std::vector<int>& normal = adv.complement;
  const int n_normal = static_cast<int>(normal.size());

  // Z envelope constants: defined over the whole network for honest runs,
  // over the normal subset when it stays connected and observable.
  bool z_defined = false;
  double lambda_min_jn = 0.0;
  if (adv.empty()) {
    z_defined = true;
    lambda_min_jn = cert.lambda_min;
  } else if (n_normal > 0 && is_connected(g, normal) &&
             is_globally_observable(model, normal)) {
    lambda_min_jn =
        min_eig(build_J(g, model, normal, instance.params.beta, instance.params.alpha).entries);
    z_defined = lambda_min_jn > 0.0;
  }

  // Impersonators simulate the honest world whose parameter carries their
  // offset; the surrogate prior radius only has to keep the spec valid.
  std::optional<ParameterSpec> bar_spec;
  if (instance.attack && is_impersonation(*instance.attack)) {
    Eigen::VectorXd theta_bar = instance.param.theta_star + instance.attack->offset;
    const double bar_eta = std::max(instance.param.eta, theta_bar.norm() * (1.0 + 1e-12));
    bar_spec.emplace(std::move(theta_bar), bar_eta);
  }

  EnvelopeState env =
      init_envelopes(instance.param.eta, n, n_normal, instance.params.alpha,
                     instance.params.beta, instance.params.r1, model.noise_bound(),
                     cert.lambda_min, lambda_min_jn, z_defined);
  ThresholdState ts = init_threshold(instance.param.eta, n, instance.params.alpha,
                                     instance.params.r1, model.noise_bound());

  RunTrace trace;
  trace.info.n_agents = n;
  trace.info.m_dim = m;
  trace.info.n_normal = n_normal;
  trace.info.params = instance.params;
  trace.info.lambda_min_j = cert.lambda_min;
  trace.info.lambda_max_j = cert.lambda_max;
  trace.info.lambda_min_jn = lambda_min_jn;
  trace.info.z_defined = z_defined;
  trace.info.eta = instance.param.eta;
  trace.info.noise_bound = model.noise_bound();
  trace.info.seed = instance.seed;
  trace.info.rounds = instance.rounds;
  trace.info.w_limit = w_limit(env);
  trace.info.z_limit = z_defined ? z_limit(env) : 0.0;
  trace.info.gamma_fixed_point = gamma_fixed_point(ts);
  trace.info.theoretical_rho_w =
      instance.params.alpha * std::sqrt(static_cast<double>(n)) / cert.lambda_min;
  trace.info.theoretical_rho_z =
      z_defined ? instance.params.alpha * std::sqrt(static_cast<double>(n_normal)) /
                      lambda_min_jn * (1.0 + env.adversary_push / env.r1)
                : 0.0;

  std::vector<AgentState> states(static_cast<std::size_t>(n));
  for (auto& s : states) s = init_agent(m);

  std::vector<std::vector<Message>> inboxes(static_cast<std::size_t>(n));
  std::vector<Eigen::VectorXd> next_estimates(static_cast<std::size_t>(n));
  std::vector<Flag> next_flags(static_cast<std::size_t>(n), Flag::NoAttack);

  bool flag_ever = false;

  auto record_row = [&](long t) {
    const ErrorNorms err = error_norms(states, instance.param.theta_star, adv);
    TraceRow row;
    row.t = t;
    row.gamma = ts.gamma;
    row.w = env.w;
    if (z_defined) row.z = env.z;
    row.err_global = err.global;
    row.err_normal = err.normal;
    row.agent_err = err.per_agent;
    row.flags.resize(states.size());
    int count = 0;
    bool detected = false;
    for (std::size_t i = 0; i < states.size(); ++i) {
      row.flags[i] = states[i].flag;
      if (states[i].flag == Flag::Attack) {
        ++count;
        if (!adv.contains(static_cast<int>(i))) detected = true;
      }
    }
    row.flag_count = count;
    row.detected = detected;
    if (detected && trace.summary.first_detection_round < 0)
      trace.summary.first_detection_round = t;
    trace.summary.detected = trace.summary.detected || detected;
    if (instance.record_estimates) {
      Eigen::MatrixXd est(m, n);
      for (int i = 0; i < n; ++i) est.col(i) = states[static_cast<std::size_t>(i)].estimate;
      trace.estimates.push_back(std::move(est));
    }
    trace.rows.push_back(std::move(row));
  };

  record_row(0);

  for (long t = 0; t < instance.rounds; ++t) {
    // deliver messages for round t
    for (auto& box : inboxes) box.clear();
    GlobalView view{std::span<const AgentState>(states.data(), states.size())};
    for (int sender = 0; sender < n; ++sender) {
      const auto& receivers = g.neighbors(sender);
      if (adv.contains(sender)) {
        std::vector<Message> out = adversary_messages(
            *instance.attack, sender, states[static_cast<std::size_t>(sender)].estimate,
            receivers, t, ts.gamma, view);
        for (auto& msg : out)
          inboxes[static_cast<std::size_t>(msg.receiver)].push_back(std::move(msg));
      } else {
        for (int receiver : receivers) {
          Message msg;
          msg.sender = sender;
          msg.receiver = receiver;
          msg.round = t;
          msg.payload = states[static_cast<std::size_t>(sender)].estimate;
          inboxes[static_cast<std::size_t>(receiver)].push_back(std::move(msg));
        }
      }
    }

    // flag updates first: they compare pre-update estimates against the
    // round-t threshold
    for (int i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      if (adv.contains(i)) {
        next_flags[idx] = Flag::NoAttack;  // adversaries never report
        continue;
      }
      next_flags[idx] = flag_update(states[idx], inboxes[idx], g.neighbors(i), ts.gamma);
    }

    // estimate updates; impersonating adversaries run the same rule against
    // measurements drawn from their offset parameter (same noise stream)
    for (int i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      const ParameterSpec& source =
          (bar_spec && adv.contains(i)) ? *bar_spec : instance.param;
      const Measurement y = measure(model, source, i, t, instance.seed, instance.noise_mode);
      next_estimates[idx] = estimate_update(states[idx], inboxes[idx], g.neighbors(i),
                                            y.value, model.h(i), instance.params);
    }

    for (int i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      states[idx].estimate = std::move(next_estimates[idx]);
      states[idx].flag = next_flags[idx];
      next_estimates[idx] = Eigen::VectorXd();
    }
    for (std::size_t i = 0; i < states.size(); ++i)
      if (states[i].flag == Flag::Attack && !adv.contains(static_cast<int>(i)))
        flag_ever = true;

    const double gamma_t = ts.gamma;
    ts = gamma_step(ts);
    const double w_next = w_step(env);
    const double z_next = z_defined ? z_step(env, gamma_t) : 0.0;
    env.w = w_next;
    env.z = z_next;

    record_row(t + 1);

    const TraceRow& row = trace.rows.back();
    if (adv.empty() &&
        row.err_global > env.w * (1.0 + kEnvelopeGuard) + kEnvelopeGuard) {
      std::ostringstream msg;
      msg << "envelope violation at round " << (t + 1) << ": global error "
          << row.err_global << " exceeds W = " << env.w;
      throw EnvelopeViolation(msg.str(), t + 1);
    }
    if (z_defined && !flag_ever &&
        row.err_normal > env.z * (1.0 + kEnvelopeGuard) + kEnvelopeGuard) {
      std::ostringstream msg;
      msg << "envelope violation at round " << (t + 1) << ": normal-subset error "
          << row.err_normal << " exceeds Z = " << env.z;
      throw EnvelopeViolation(msg.str(), t + 1);
    }
  }

  const TraceRow& last = trace.rows.back();
  trace.summary.final_err_global = last.err_global;
  trace.summary.final_err_normal = last.err_normal;
  trace.summary.final_gamma = last.gamma;
  trace.summary.final_w = last.w;
  trace.summary.final_z = last.z;
  if (model.noise_bound() > 0.0)
    trace.summary.implied_rho = last.err_normal / model.noise_bound();
  return trace;
}

void emit_csv(const RunTrace& trace, std::ostream& out, bool per_agent_columns) {
  out << "t,gamma,W,Z,err_global,err_normal,detected,flag_count";
  if (per_agent_columns) {
    for (int i = 0; i < trace.info.n_agents; ++i) out << ",err_agent_" << (i + 1);
    for (int i = 0; i < trace.info.n_agents; ++i) out << ",flag_agent_" << (i + 1);
  }
  out << "\n";
  for (const TraceRow& row : trace.rows) {
    out << row.t << ',' << fmt_double(row.gamma) << ',' << fmt_double(row.w) << ',';
    if (row.z) out << fmt_double(*row.z);
    out << ',' << fmt_double(row.err_global) << ',' << fmt_double(row.err_normal)
        << ',' << (row.detected ? 1 : 0) << ',' << row.flag_count;
    if (per_agent_columns) {
      for (double e : row.agent_err) out << ',' << fmt_double(e);
      for (Flag f : row.flags) out << ',' << (f == Flag::Attack ? 1 : 0);
    }
    out << "\n";
  }
}

void write_csv(const RunTrace& trace, const std::string& path, bool per_agent_columns) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open CSV output: " + path);
  emit_csv(trace, out, per_agent_columns);
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string summary_text(const RunTrace& trace) {
  std::ostringstream out;
  const RunInfo& info = trace.info;
  const RunSummary& s = trace.summary;
  out << "agents = " << info.n_agents << "\n"
      << "normal_agents = " << info.n_normal << "\n"
      << "parameter_dim = " << info.m_dim << "\n"
      << "rounds = " << info.rounds << "\n"
      << "seed = " << info.seed << "\n"
      << "eta = " << fmt_double(info.eta) << "\n"
      << "noise_bound = " << fmt_double(info.noise_bound) << "\n"
      << "alpha = " << fmt_double(info.params.alpha) << "\n"
      << "beta = " << fmt_double(info.params.beta) << "\n"
      << "r1 = " << fmt_double(info.params.r1) << "\n"
      << "lambda_min_J = " << fmt_double(info.lambda_min_j) << "\n"
      << "lambda_max_J = " << fmt_double(info.lambda_max_j) << "\n"
      << "detected = " << (s.detected ? "true" : "false") << "\n"
      << "first_detection_round = " << s.first_detection_round << "\n"
      << "final_err_global = " << fmt_double(s.final_err_global) << "\n"
      << "final_err_normal = " << fmt_double(s.final_err_normal) << "\n"
      << "final_gamma = " << fmt_double(s.final_gamma) << "\n"
      << "gamma_fixed_point = " << fmt_double(info.gamma_fixed_point) << "\n"
      << "final_W = " << fmt_double(s.final_w) << "\n"
      << "W_limit = " << fmt_double(info.w_limit) << "\n";
  if (info.z_defined) {
    out << "final_Z = " << fmt_double(s.final_z.value_or(0.0)) << "\n"
        << "Z_limit = " << fmt_double(info.z_limit) << "\n"
        << "lambda_min_J_normal = " << fmt_double(info.lambda_min_jn) << "\n"
        << "theoretical_rho_attacked = " << fmt_double(info.theoretical_rho_z) << "\n";
  }
  out << "theoretical_rho_honest = " << fmt_double(info.theoretical_rho_w) << "\n";
  if (s.implied_rho)
    out << "implied_rho = " << fmt_double(*s.implied_rho) << "\n";
  return out.str();
}

void write_summary(const RunTrace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open summary output: " + path);
  out << summary_text(trace);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace frde
