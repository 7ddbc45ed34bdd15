#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>

#include "frde/params.hpp"

namespace frde {

enum class Flag : std::uint8_t { NoAttack = 0, Attack = 1 };

/// Per-agent protocol state. The flag is monotone: once Attack, it never
/// reverts.
struct AgentState {
  Eigen::VectorXd estimate;
  Flag flag = Flag::NoAttack;
};

struct Message {
  int sender = 0;
  int receiver = 0;
  long round = 0;
  Eigen::VectorXd payload;
};

/// Detection threshold recursion: gamma' = (1 - r1) * gamma + alpha*B*sqrt(N),
/// started at gamma_0 = 2 * eta * sqrt(N).
struct ThresholdState {
  double gamma = 0.0;
  double r1 = 0.0;
  double drive = 0.0;  // alpha * B * sqrt(N)
};

AgentState init_agent(int m_dim);

ThresholdState init_threshold(double eta, int n_agents, double alpha, double r1,
                              double noise_bound);

ThresholdState gamma_step(const ThresholdState& ts);

/// Fixed point of the threshold recursion, alpha*B*sqrt(N) / r1.
double gamma_fixed_point(const ThresholdState& ts);

/// Consensus + innovations update:
///   x' = x - beta * sum_{l in neighbors} (x - m_l) + alpha * H^T (y - H x).
/// The inbox must hold exactly one message per neighbor for this round;
/// anything else is a synchronous-contract violation ("malformed round").
Eigen::VectorXd estimate_update(const AgentState& state, std::span<const Message> inbox,
                                std::span<const int> neighbors, const Eigen::VectorXd& y,
                                const Eigen::MatrixXd& h, const FrdeParams& params);

/// Raises Attack when any neighbor message deviates from the agent's current
/// (pre-update) estimate by strictly more than gamma; Attack absorbs.
Flag flag_update(const AgentState& state, std::span<const Message> inbox,
                 std::span<const int> neighbors, double gamma);

}  // namespace frde
