#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frde/protocol.hpp"
#include "frde/sensing.hpp"

namespace frde {

/// Partition of the agents into adversarial members and the normal
/// complement.
struct AdversarySet {
  std::vector<int> members;     // ascending
  std::vector<int> complement;  // ascending

  static AdversarySet of(int n_agents, std::vector<int> members);
  bool contains(int agent) const;
  bool empty() const { return members.empty(); }
};

enum class AttackKind {
  NullSpaceImpersonation,   // honest protocol against theta* + mu, mu in the
                            // null space of the normal agents' stacked matrices
  FixedOffsetImpersonation, // same mechanics, arbitrary offset (detectable
                            // when the normal models are observable)
  ThresholdRiding,          // per-receiver payloads a fixed fraction of gamma
                            // away from the receiver's own estimate
  ArbitraryScript,          // replayed payload table
};

/// Payloads keyed by (round, sender), either per receiver or broadcast.
/// Text form, one entry per line: "t sender receiver v1 .. vM" with 1-based
/// agent ids and receiver "*" for broadcast.
class ScriptTable {
 public:
  void add(long round, int sender, std::optional<int> receiver, Eigen::VectorXd payload);
  const Eigen::VectorXd* lookup(long round, int sender, int receiver) const;
  bool empty() const { return entries_.empty(); }

  static ScriptTable parse(const std::string& text, int m_dim);

 private:
  // receiver key -1 = broadcast
  std::map<std::tuple<long, int, int>, Eigen::VectorXd> entries_;
};

struct AttackStrategy {
  AttackKind kind = AttackKind::FixedOffsetImpersonation;
  Eigen::VectorXd offset;          // mu: impersonated parameter = theta* + mu
  double ride_fraction = 0.0;      // in (0, 1) for an undetected ride
  Eigen::VectorXd ride_direction;  // unit vector
  ScriptTable script;
};

enum class MagnitudePolicy { MaxFeasible, Given };

/// Largest offset c*v along direction v keeping theta + offset inside the
/// prior ball with a 1% margin; needs norm(theta) < eta.
Eigen::VectorXd saturate_offset(const Eigen::VectorXd& theta, double eta,
                                const Eigen::VectorXd& direction);

/// Offset impersonation along a null direction of the normal agents' stacked
/// sensing matrices. Fails when the normal models are globally observable
/// ("no undetectable direction") or the parameter sits on the prior boundary
/// ("no room in the prior ball"). MaxFeasible saturates the offset; Given
/// validates the supplied one.
AttackStrategy synthesize_null_space_attack(const SensingModel& model,
                                            std::span<const int> normal_set,
                                            const ParameterSpec& spec,
                                            MagnitudePolicy policy,
                                            const Eigen::VectorXd* given_offset = nullptr);

AttackStrategy fixed_offset_attack(Eigen::VectorXd offset);
AttackStrategy threshold_riding_attack(double ride_fraction, Eigen::VectorXd direction);
AttackStrategy scripted_attack(ScriptTable script);

/// Read-only view of the whole network state. Adversaries get it, normal
/// agents never do: the knowledge asymmetry is enforced by which interface a
/// caller holds.
struct GlobalView {
  std::span<const AgentState> states;
};

/// Outgoing messages of one adversarial sender for this round.
std::vector<Message> adversary_messages(const AttackStrategy& strategy, int sender,
                                        const Eigen::VectorXd& own_estimate,
                                        std::span<const int> receivers, long round,
                                        double gamma, const GlobalView& view);

}  // namespace frde
