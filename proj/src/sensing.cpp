#include "frde/sensing.hpp"

#include <cmath>
#include <stdexcept>

#include "frde/rng.hpp"
#include "frde/spectral.hpp"

namespace frde {

ParameterSpec::ParameterSpec(Eigen::VectorXd theta, double eta_radius)
    : theta_star(std::move(theta)), eta(eta_radius) {
  if (!theta_star.allFinite() || !std::isfinite(eta))
    throw std::invalid_argument("non-finite parameter spec");
  if (eta < 0.0) throw std::invalid_argument("prior radius must be nonnegative");
  if (theta_star.norm() > eta * (1.0 + 1e-12))
    throw std::invalid_argument("parameter lies outside the prior ball");
}

SensingModel::SensingModel(std::vector<Eigen::MatrixXd> h, double noise_bound)
    : h_(std::move(h)), noise_bound_(noise_bound) {
  if (h_.empty()) throw std::invalid_argument("sensing model needs at least one agent");
  if (!(noise_bound_ >= 0.0)) throw std::invalid_argument("noise bound must be nonnegative");
  m_dim_ = static_cast<int>(h_[0].cols());
  if (m_dim_ < 1) throw std::invalid_argument("parameter dimension must be positive");
  for (const auto& hn : h_) {
    if (hn.cols() != m_dim_)
      throw std::invalid_argument("inconsistent parameter dimension across agents");
    if (!hn.allFinite()) throw std::invalid_argument("non-finite sensing matrix");
    if (hn.rows() > 0) {
      const Eigen::MatrixXd gram = hn.transpose() * hn;
      const double lmax = max_eig(SymmetricMatrix(0.5 * (gram + gram.transpose())));
      if (lmax > 1.0 + 1e-12)
        throw std::invalid_argument("sensing matrix exceeds unit spectral bound");
    }
  }
}

const Eigen::MatrixXd& SensingModel::h(int agent) const {
  if (agent < 0 || agent >= num_agents())
    throw std::out_of_range("agent id out of range");
  return h_[static_cast<std::size_t>(agent)];
}

Eigen::MatrixXd SensingModel::stacked(std::span<const int> subset) const {
  Eigen::Index rows = 0;
  for (int i : subset) rows += h(i).rows();
  Eigen::MatrixXd out(rows, m_dim_);
  Eigen::Index at = 0;
  for (int i : subset) {
    out.middleRows(at, h(i).rows()) = h(i);
    at += h(i).rows();
  }
  return out;
}

Eigen::MatrixXd SensingModel::gram_sum(std::span<const int> subset) const {
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(m_dim_, m_dim_);
  for (int i : subset) sum += h(i).transpose() * h(i);
  return sum;
}

SensingModel normalize_sensing(std::vector<Eigen::MatrixXd> raw, double raw_noise_bound) {
  if (raw.empty()) throw std::invalid_argument("sensing model needs at least one agent");
  if (!(raw_noise_bound >= 0.0))
    throw std::invalid_argument("noise bound must be nonnegative");
  double max_scale = 0.0;
  for (auto& hn : raw) {
    if (!hn.allFinite()) throw std::invalid_argument("non-finite sensing matrix");
    double scale = 1.0;
    if (hn.rows() > 0) {
      const Eigen::MatrixXd gram = hn.transpose() * hn;
      const double lmax = max_eig(SymmetricMatrix(0.5 * (gram + gram.transpose())));
      if (lmax > 1.0) scale = 1.0 / std::sqrt(lmax);
    }
    hn *= scale;
    max_scale = std::max(max_scale, scale);
  }
  return SensingModel(std::move(raw), max_scale * raw_noise_bound);
}

bool is_globally_observable(const SensingModel& model, std::span<const int> subset) {
  if (subset.empty()) return false;
  const Eigen::MatrixXd gram = model.gram_sum(subset);
  const EigenResult eig = eig_sym(SymmetricMatrix(0.5 * (gram + gram.transpose())), false);
  const double lmax = eig.eigenvalues(eig.eigenvalues.size() - 1);
  if (lmax <= 0.0) return false;
  return eig.eigenvalues(0) > 1e-8 * lmax;
}

Eigen::VectorXd noise_draw(int rows, double bound, int agent, long round,
                           std::uint64_t seed, NoiseMode mode) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(rows);
  if (rows == 0 || bound == 0.0) return w;
  if (mode == NoiseMode::WorstCaseConstant) {
    w.setConstant(bound / std::sqrt(static_cast<double>(rows)));
    return w;
  }
  Rng rng(seed, Stream::Noise, static_cast<std::uint64_t>(agent),
          static_cast<std::uint64_t>(round));
  double norm = 0.0;
  do {
    for (int i = 0; i < rows; ++i) w(i) = rng.next_gaussian();
    norm = w.norm();
  } while (norm == 0.0);
  const double u = rng.next_double();
  const double radius = bound * std::pow(u, 1.0 / static_cast<double>(rows));
  return w * (radius / norm);
}

Measurement measure(const SensingModel& model, const ParameterSpec& spec,
                    int agent, long round, std::uint64_t seed, NoiseMode mode) {
  const Eigen::MatrixXd& hn = model.h(agent);
  if (spec.dim() != model.m_dim())
    throw std::invalid_argument("parameter dimension does not match sensing model");
  Measurement m;
  m.agent = agent;
  m.round = round;
  m.value = hn * spec.theta_star +
            noise_draw(static_cast<int>(hn.rows()), model.noise_bound(), agent,
                       round, seed, mode);
  return m;
}

}  // namespace frde
