#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

namespace frde {

/// The unknown parameter together with the prior ball that contains it:
/// norm(theta_star) <= eta.
struct ParameterSpec {
  Eigen::VectorXd theta_star;
  double eta = 0.0;

  ParameterSpec(Eigen::VectorXd theta, double eta_radius);
  int dim() const { return static_cast<int>(theta_star.size()); }
};

/// Per-agent linear measurement matrices plus the uniform noise-norm bound.
/// Every matrix satisfies lambda_max(H^T H) <= 1; inputs that do not are
/// rejected (normalize first, see normalize_sensing).
class SensingModel {
 public:
  SensingModel(std::vector<Eigen::MatrixXd> h, double noise_bound);

  int num_agents() const { return static_cast<int>(h_.size()); }
  int m_dim() const { return m_dim_; }
  double noise_bound() const { return noise_bound_; }
  const Eigen::MatrixXd& h(int agent) const;

  /// Rows of the selected agents' matrices stacked in subset order.
  Eigen::MatrixXd stacked(std::span<const int> subset) const;

  /// Sum of H_i^T H_i over the subset (M x M, zero for an empty subset).
  Eigen::MatrixXd gram_sum(std::span<const int> subset) const;

 private:
  std::vector<Eigen::MatrixXd> h_;
  double noise_bound_;
  int m_dim_;
};

/// Scales each matrix by c = min(1, 1/sqrt(lambda_max(H^T H))) so the model
/// invariant holds; the returned noise bound is max_n c_n * B, the tightest
/// uniform bound valid for every scaled agent.
SensingModel normalize_sensing(std::vector<Eigen::MatrixXd> raw, double raw_noise_bound);

/// True iff the summed Gram matrix over the subset is invertible at relative
/// tolerance 1e-8 (empty subsets and all-zero sums are unobservable).
bool is_globally_observable(const SensingModel& model, std::span<const int> subset);

enum class NoiseMode {
  UniformBall,        // direction uniform on the sphere, radius B * u^(1/d)
  WorstCaseConstant,  // fixed vector of norm B every round
};

struct Measurement {
  int agent = 0;
  long round = 0;
  Eigen::VectorXd value;
};

/// y = H_n theta + w with norm(w) <= B. The noise draw is a pure function of
/// (seed, agent, round), so measurement order never matters.
Measurement measure(const SensingModel& model, const ParameterSpec& spec,
                    int agent, long round, std::uint64_t seed,
                    NoiseMode mode = NoiseMode::UniformBall);

/// The noise vector alone (dimension = rows of H_agent).
Eigen::VectorXd noise_draw(int rows, double bound, int agent, long round,
                           std::uint64_t seed, NoiseMode mode);

}  // namespace frde
