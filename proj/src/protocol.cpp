#include "frde/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace frde {

namespace {

// Exactly one message per neighbor, senders drawn from the neighbor set.
void check_inbox(std::span<const Message> inbox, std::span<const int> neighbors) {
  if (inbox.size() != neighbors.size())
    throw std::runtime_error("malformed round: message count does not match neighbor count");
  std::vector<int> senders;
  senders.reserve(inbox.size());
  for (const Message& m : inbox) senders.push_back(m.sender);
  std::sort(senders.begin(), senders.end());
  if (std::adjacent_find(senders.begin(), senders.end()) != senders.end())
    throw std::runtime_error("malformed round: duplicate neighbor message");
  // neighbors spans are sorted by construction in Graph
  if (!std::equal(senders.begin(), senders.end(), neighbors.begin(), neighbors.end()))
    throw std::runtime_error("malformed round: message from non-neighbor or missing neighbor");
}

}  // namespace

AgentState init_agent(int m_dim) {
  if (m_dim < 1) throw std::invalid_argument("estimate dimension must be positive");
  AgentState s;
  s.estimate = Eigen::VectorXd::Zero(m_dim);
  s.flag = Flag::NoAttack;
  return s;
}

ThresholdState init_threshold(double eta, int n_agents, double alpha, double r1,
                              double noise_bound) {
  ThresholdState ts;
  const double sqrt_n = std::sqrt(static_cast<double>(n_agents));
  ts.gamma = 2.0 * eta * sqrt_n;
  ts.r1 = r1;
  ts.drive = alpha * noise_bound * sqrt_n;
  return ts;
}

ThresholdState gamma_step(const ThresholdState& ts) {
  ThresholdState next = ts;
  next.gamma = (1.0 - ts.r1) * ts.gamma + ts.drive;
  return next;
}

double gamma_fixed_point(const ThresholdState& ts) {
  if (!(ts.r1 > 0.0)) throw std::domain_error("threshold decay must be positive");
  return ts.drive / ts.r1;
}

Eigen::VectorXd estimate_update(const AgentState& state, std::span<const Message> inbox,
                                std::span<const int> neighbors, const Eigen::VectorXd& y,
                                const Eigen::MatrixXd& h, const FrdeParams& params) {
  check_inbox(inbox, neighbors);
  Eigen::VectorXd next = state.estimate;
  for (const Message& m : inbox)
    next -= params.beta * (state.estimate - m.payload);
  next += params.alpha * (h.transpose() * (y - h * state.estimate));
  return next;
}

Flag flag_update(const AgentState& state, std::span<const Message> inbox,
                 std::span<const int> neighbors, double gamma) {
  check_inbox(inbox, neighbors);
  if (state.flag == Flag::Attack) return Flag::Attack;
  for (const Message& m : inbox)
    if ((state.estimate - m.payload).norm() > gamma) return Flag::Attack;
  return Flag::NoAttack;
}

}  // namespace frde
