#include "frde/params.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace frde {

std::vector<int> all_agents(const Graph& g) {
  std::vector<int> ids(static_cast<std::size_t>(g.num_vertices()));
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

JMatrix build_J(const Graph& g, const SensingModel& model,
                std::span<const int> subset, double beta, double alpha) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("step sizes must be positive");
  if (g.num_vertices() != model.num_agents())
    throw std::invalid_argument("graph and sensing model disagree on agent count");
  const int m = model.m_dim();
  const int k = static_cast<int>(subset.size());
  const Eigen::MatrixXd l = induced_laplacian(g, subset);
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k) * m,
                                            static_cast<Eigen::Index>(k) * m);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      j.block(static_cast<Eigen::Index>(a) * m, static_cast<Eigen::Index>(b) * m, m, m) =
          beta * l(a, b) * Eigen::MatrixXd::Identity(m, m);
  for (int a = 0; a < k; ++a) {
    const Eigen::MatrixXd& hn = model.h(subset[static_cast<std::size_t>(a)]);
    j.block(static_cast<Eigen::Index>(a) * m, static_cast<Eigen::Index>(a) * m, m, m) +=
        alpha * (hn.transpose() * hn);
  }
  return JMatrix{SymmetricMatrix(0.5 * (j + j.transpose())),
                 std::vector<int>(subset.begin(), subset.end())};
}

JMatrix build_J(const Graph& g, const SensingModel& model, double beta, double alpha) {
  const std::vector<int> subset = all_agents(g);
  return build_J(g, model, subset, beta, alpha);
}

Eigen::MatrixXd gram_average(const SensingModel& model, std::span<const int> subset) {
  return model.gram_sum(subset) / static_cast<double>(model.num_agents());
}

FrdeParams procedure1(const Graph& g, const SensingModel& model,
                      double alpha_hat, double beta_hat) {
  if (!(alpha_hat > 0.0) || !(beta_hat > 0.0))
    throw std::invalid_argument("auxiliary step sizes must be positive");
  const JMatrix j_hat = build_J(g, model, beta_hat, alpha_hat);
  const EigenResult eig = eig_sym(j_hat.entries, false);
  const double lambda_max = eig.eigenvalues(eig.eigenvalues.size() - 1);
  const double lambda_min = eig.eigenvalues(0);
  FrdeParams p;
  p.alpha = alpha_hat / lambda_max;
  p.beta = beta_hat / lambda_max;
  p.r1 = lambda_min / lambda_max;  // lambda_min of the rescaled J
  p.provenance = ParamProvenance::Procedure1;
  return p;
}

double procedure2_kappa1_bound(double lambda2, double gram_min) {
  return (gram_min + 2.0 * std::sqrt(4.0 - gram_min)) / lambda2;
}

FrdeParams procedure2(double lambda2, double lambda_max_l, double gram_min,
                      int n_agents, std::optional<double> kappa1) {
  if (!(lambda2 > 0.0)) throw std::invalid_argument("lambda2 must be positive");
  if (!(lambda_max_l > 0.0))
    throw std::invalid_argument("lambda_max must be positive");
  if (!(gram_min > 0.0) || gram_min > 1.0)
    throw std::invalid_argument("gram_min must lie in (0, 1]");
  if (n_agents < 1) throw std::invalid_argument("agent count must be positive");

  const double bound = procedure2_kappa1_bound(lambda2, gram_min);
  const double k1 = kappa1.value_or(1.01 * bound);
  if (k1 <= bound) throw std::invalid_argument("kappa1 too small");

  FrdeParams p;
  p.alpha = 1.0 / (k1 * lambda_max_l + static_cast<double>(n_agents));
  p.beta = p.alpha * k1;
  const double diff = gram_min - lambda2 * k1;
  const double radical = 4.0 * gram_min + diff * diff;
  p.r1 = p.alpha * (gram_min - 4.0 * gram_min / std::sqrt(radical));
  if (!(p.r1 > 0.0)) throw std::runtime_error("degenerate r1");
  p.provenance = ParamProvenance::Procedure2;
  return p;
}

Certificate certify(const FrdeParams& params, const Graph& g, const SensingModel& model) {
  Certificate cert;
  if (!(params.alpha > 0.0) || !(params.beta > 0.0)) return cert;  // both checks fail
  const JMatrix j = build_J(g, model, params.beta, params.alpha);
  const EigenResult eig = eig_sym(j.entries, false);
  cert.lambda_min = eig.eigenvalues(0);
  cert.lambda_max = eig.eigenvalues(eig.eigenvalues.size() - 1);
  cert.spectral_margin = 1.0 - cert.lambda_max;
  cert.r1_margin = cert.lambda_min - params.r1;
  cert.spectral_ok = cert.lambda_max <= 1.0 + Certificate::tol;
  cert.r1_ok = params.r1 > 0.0 && params.r1 <= cert.lambda_min + Certificate::tol;
  return cert;
}

}  // namespace frde
