#include "frde/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "frde/spectral.hpp"

namespace frde {

AdversarySet AdversarySet::of(int n_agents, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw std::invalid_argument("adversary listed twice");
  for (int a : members)
    if (a < 0 || a >= n_agents) throw std::invalid_argument("adversary id out of range");
  AdversarySet s;
  s.members = std::move(members);
  for (int v = 0; v < n_agents; ++v)
    if (!std::binary_search(s.members.begin(), s.members.end(), v))
      s.complement.push_back(v);
  return s;
}

bool AdversarySet::contains(int agent) const {
  return std::binary_search(members.begin(), members.end(), agent);
}

void ScriptTable::add(long round, int sender, std::optional<int> receiver,
                      Eigen::VectorXd payload) {
  entries_[{round, sender, receiver.value_or(-1)}] = std::move(payload);
}

const Eigen::VectorXd* ScriptTable::lookup(long round, int sender, int receiver) const {
  auto it = entries_.find({round, sender, receiver});
  if (it == entries_.end()) it = entries_.find({round, sender, -1});
  return it == entries_.end() ? nullptr : &it->second;
}

ScriptTable ScriptTable::parse(const std::string& text, int m_dim) {
  ScriptTable table;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    long round = 0;
    int sender = 0;
    std::string receiver_tok;
    if (!(row >> round >> sender >> receiver_tok)) {
      if (row.eof() && line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw std::invalid_argument("script line " + std::to_string(line_no) + " is malformed");
    }
    std::optional<int> receiver;
    if (receiver_tok != "*") receiver = std::stoi(receiver_tok) - 1;
    Eigen::VectorXd payload(m_dim);
    for (int i = 0; i < m_dim; ++i)
      if (!(row >> payload(i)))
        throw std::invalid_argument("script line " + std::to_string(line_no) +
                                    ": expected " + std::to_string(m_dim) + " payload values");
    table.add(round, sender - 1, receiver, std::move(payload));
  }
  return table;
}

Eigen::VectorXd saturate_offset(const Eigen::VectorXd& theta, double eta,
                                const Eigen::VectorXd& direction) {
  const double dn = direction.norm();
  if (!(dn > 0.0)) throw std::invalid_argument("offset direction must be nonzero");
  Eigen::VectorXd v = direction / dn;
  const double tn = theta.norm();
  if (!(tn < eta)) throw std::invalid_argument("no room in the prior ball");
  double target = 0.99 * eta;
  if (target <= tn) target = 0.5 * (tn + eta);
  // walk against the parameter's component along the line: more room, larger
  // offset
  if (theta.dot(v) > 0.0) v = -v;
  const double d = theta.dot(v);
  const double c = -d + std::sqrt(d * d + target * target - tn * tn);
  return c * v;
}

AttackStrategy synthesize_null_space_attack(const SensingModel& model,
                                            std::span<const int> normal_set,
                                            const ParameterSpec& spec,
                                            MagnitudePolicy policy,
                                            const Eigen::VectorXd* given_offset) {
  if (is_globally_observable(model, normal_set))
    throw std::invalid_argument("no undetectable direction: normal models are globally observable");
  if (!(spec.theta_star.norm() < spec.eta))
    throw std::invalid_argument("no room in the prior ball");

  const Eigen::MatrixXd stacked = model.stacked(normal_set);
  const Eigen::MatrixXd basis = null_space_basis(stacked);
  if (basis.cols() == 0)
    throw std::runtime_error("null space extraction failed on an unobservable set");

  AttackStrategy strategy;
  strategy.kind = AttackKind::NullSpaceImpersonation;
  if (policy == MagnitudePolicy::Given) {
    if (!given_offset) throw std::invalid_argument("missing offset vector");
    // must be invisible to every normal agent and keep theta* + mu feasible
    const double scale = std::max(1.0, stacked.norm() * given_offset->norm());
    if ((stacked * (*given_offset)).norm() > 1e-8 * scale)
      throw std::invalid_argument("offset is not in the normal null space");
    if ((spec.theta_star + *given_offset).norm() > spec.eta * (1.0 + 1e-12))
      throw std::invalid_argument("offset leaves the prior ball");
    strategy.offset = *given_offset;
  } else {
    strategy.offset = saturate_offset(spec.theta_star, spec.eta, basis.col(0));
  }
  return strategy;
}

AttackStrategy fixed_offset_attack(Eigen::VectorXd offset) {
  AttackStrategy s;
  s.kind = AttackKind::FixedOffsetImpersonation;
  s.offset = std::move(offset);
  return s;
}

AttackStrategy threshold_riding_attack(double ride_fraction, Eigen::VectorXd direction) {
  if (!(ride_fraction > 0.0)) throw std::invalid_argument("ride fraction must be positive");
  const double n = direction.norm();
  if (!(n > 0.0)) throw std::invalid_argument("ride direction must be nonzero");
  AttackStrategy s;
  s.kind = AttackKind::ThresholdRiding;
  s.ride_fraction = ride_fraction;
  s.ride_direction = direction / n;
  return s;
}

AttackStrategy scripted_attack(ScriptTable script) {
  AttackStrategy s;
  s.kind = AttackKind::ArbitraryScript;
  s.script = std::move(script);
  return s;
}

std::vector<Message> adversary_messages(const AttackStrategy& strategy, int sender,
                                        const Eigen::VectorXd& own_estimate,
                                        std::span<const int> receivers, long round,
                                        double gamma, const GlobalView& view) {
  std::vector<Message> out;
  out.reserve(receivers.size());
  for (int receiver : receivers) {
    Message m;
    m.sender = sender;
    m.receiver = receiver;
    m.round = round;
    switch (strategy.kind) {
      case AttackKind::NullSpaceImpersonation:
      case AttackKind::FixedOffsetImpersonation:
        // impersonators follow the honest message rule on their own state
        m.payload = own_estimate;
        break;
      case AttackKind::ThresholdRiding:
        m.payload = view.states[static_cast<std::size_t>(receiver)].estimate +
                    (strategy.ride_fraction * gamma) * strategy.ride_direction;
        break;
      case AttackKind::ArbitraryScript: {
        const Eigen::VectorXd* p = strategy.script.lookup(round, sender, receiver);
        if (!p) throw std::runtime_error("script underrun");
        m.payload = *p;
        break;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace frde
