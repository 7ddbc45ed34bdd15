#pragma once

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

#include "frde/graph.hpp"
#include "frde/sensing.hpp"
#include "frde/spectral.hpp"

namespace frde {

enum class ParamProvenance { Procedure1, Procedure2, Manual };

/// Step sizes and threshold decay for the estimator. Validity means
/// lambda_max(J) <= 1 and 0 < r1 <= lambda_min(J); see certify().
struct FrdeParams {
  double alpha = 0.0;
  double beta = 0.0;
  double r1 = 0.0;
  ParamProvenance provenance = ParamProvenance::Manual;
};

/// J = beta * (L kron I_M) + alpha * blkdiag(H_i^T H_i), assembled over the
/// given agents in subset order.
struct JMatrix {
  SymmetricMatrix entries;
  std::vector<int> subset;
};

JMatrix build_J(const Graph& g, const SensingModel& model,
                std::span<const int> subset, double beta, double alpha);
JMatrix build_J(const Graph& g, const SensingModel& model, double beta, double alpha);

/// Average Gram matrix over the subset; the normalization always uses the
/// full network size, also when the subset is proper.
Eigen::MatrixXd gram_average(const SensingModel& model, std::span<const int> subset);

std::vector<int> all_agents(const Graph& g);

/// Scale auxiliary step sizes by the resulting largest eigenvalue of J, then
/// take r1 as the smallest. Needs the whole graph and all sensing matrices.
FrdeParams procedure1(const Graph& g, const SensingModel& model,
                      double alpha_hat, double beta_hat);

/// The strict lower bound that kappa1 must exceed in the knowledge-light
/// selection rule.
double procedure2_kappa1_bound(double lambda2, double gram_min);

/// Selection from spectral summaries only: lambda2 and lambda_max of the
/// Laplacian (or the connectivity bounds 4/N^2 and N), the smallest
/// eigenvalue of the average Gram matrix, and the agent count. When kappa1
/// is not given it is set to 1.01x its lower bound.
FrdeParams procedure2(double lambda2, double lambda_max_l, double gram_min,
                      int n_agents, std::optional<double> kappa1 = std::nullopt);

struct Certificate {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double spectral_margin = 0.0;  // 1 - lambda_max
  double r1_margin = 0.0;        // lambda_min - r1
  bool spectral_ok = false;      // lambda_max <= 1 + tol
  bool r1_ok = false;            // 0 < r1 <= lambda_min + tol
  static constexpr double tol = 1e-9;

  bool pass() const { return spectral_ok && r1_ok; }
};

/// Evaluates both validity conditions for the given parameters on the full
/// network and reports the margins.
Certificate certify(const FrdeParams& params, const Graph& g, const SensingModel& model);

}  // namespace frde
