#pragma once

namespace frde {

/// Theoretical error envelopes, advanced alongside the simulation.
///
/// W bounds the stacked error of the whole (honest) network:
///   W' = (1 - lambda_min(J)) * W + alpha*B*sqrt(N),        W_0 = eta*sqrt(N).
/// Z bounds the stacked error of the normal subset while no flag has been
/// raised:
///   Z' = (1 - r2) * Z + kappa2 * gamma + alpha*B*sqrt(|N|), Z_0 = eta*sqrt(|N|),
/// with r2 = lambda_min(J over the normal subset) and
/// kappa2 = beta * (N - |normal|) * sqrt(|normal|).
struct EnvelopeState {
  double w = 0.0;
  double z = 0.0;
  double lambda_min_j = 0.0;   // lambda_min of J over all agents
  double lambda_min_jn = 0.0;  // r2, over the normal subset (when defined)
  double kappa2 = 0.0;
  double w_drive = 0.0;        // alpha * B * sqrt(N)
  double z_drive = 0.0;        // alpha * B * sqrt(|normal|)
  double r1 = 0.0;
  double adversary_push = 0.0; // beta * (N - |normal|) * sqrt(N), limit term
  bool z_defined = false;
};

/// Builds the constants and the t = 0 values. lambda_min_jn may be NaN/0 when
/// the normal subset is disconnected or unobservable; Z is then undefined.
EnvelopeState init_envelopes(double eta, int n_agents, int n_normal, double alpha,
                             double beta, double r1, double noise_bound,
                             double lambda_min_j, double lambda_min_jn,
                             bool z_defined);

/// One W recursion step; requires a certified lambda_min(J) > 0.
double w_step(const EnvelopeState& env);

/// Closed-form limit alpha*B*sqrt(N) / lambda_min(J).
double w_limit(const EnvelopeState& env);

/// One Z recursion step, fed the current detection threshold.
double z_step(const EnvelopeState& env, double gamma_t);

/// Closed-form limit
///   alpha*B*sqrt(|N|)/r2 * (1 + beta*(N-|N|)*sqrt(N)/r1).
double z_limit(const EnvelopeState& env);

/// Correctness predicate: final stacked subset error <= rho * B. With B = 0
/// the check degrades to exactness at tolerance 1e-9.
bool check_correctness(double final_subset_error, double rho, double noise_bound);

}  // namespace frde
