#include "frde/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace frde {

EnvelopeState init_envelopes(double eta, int n_agents, int n_normal, double alpha,
                             double beta, double r1, double noise_bound,
                             double lambda_min_j, double lambda_min_jn,
                             bool z_defined) {
  if (n_normal < 0 || n_normal > n_agents)
    throw std::invalid_argument("normal subset size out of range");
  EnvelopeState env;
  const double sqrt_n = std::sqrt(static_cast<double>(n_agents));
  const double sqrt_nn = std::sqrt(static_cast<double>(n_normal));
  env.w = eta * sqrt_n;
  env.z = eta * sqrt_nn;
  env.lambda_min_j = lambda_min_j;
  env.lambda_min_jn = lambda_min_jn;
  env.kappa2 = beta * static_cast<double>(n_agents - n_normal) * sqrt_nn;
  env.w_drive = alpha * noise_bound * sqrt_n;
  env.z_drive = alpha * noise_bound * sqrt_nn;
  env.r1 = r1;
  env.adversary_push = beta * static_cast<double>(n_agents - n_normal) * sqrt_n;
  env.z_defined = z_defined;
  return env;
}

double w_step(const EnvelopeState& env) {
  if (!(env.lambda_min_j > 0.0)) throw std::runtime_error("uncertified");
  return (1.0 - env.lambda_min_j) * env.w + env.w_drive;
}

double w_limit(const EnvelopeState& env) {
  if (!(env.lambda_min_j > 0.0)) throw std::runtime_error("uncertified");
  return env.w_drive / env.lambda_min_j;
}

double z_step(const EnvelopeState& env, double gamma_t) {
  if (!env.z_defined || !(env.lambda_min_jn > 0.0))
    throw std::runtime_error("normal set not observable/connected");
  return (1.0 - env.lambda_min_jn) * env.z + env.kappa2 * gamma_t + env.z_drive;
}

double z_limit(const EnvelopeState& env) {
  if (!env.z_defined || !(env.lambda_min_jn > 0.0))
    throw std::runtime_error("normal set not observable/connected");
  if (!(env.r1 > 0.0)) throw std::runtime_error("uncertified");
  return env.z_drive / env.lambda_min_jn * (1.0 + env.adversary_push / env.r1);
}

bool check_correctness(double final_subset_error, double rho, double noise_bound) {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  if (noise_bound == 0.0) return final_subset_error <= 1e-9;
  return final_subset_error <= rho * noise_bound;
}

}  // namespace frde
