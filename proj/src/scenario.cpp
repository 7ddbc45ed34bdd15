#include "frde/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "frde/rng.hpp"

namespace frde {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse number for " + what + ": \"" + s + "\"");
  }
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse integer for " + what + ": \"" + s + "\"");
  }
}

bool parse_bool(const std::string& s, const std::string& what) {
  const std::string v = lower(trim(s));
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw std::invalid_argument("cannot parse boolean for " + what + ": \"" + s + "\"");
}

// "1..100 105 110..112" -> 0-based ids
std::vector<int> parse_id_list(const std::string& s, const std::string& what) {
  std::vector<int> ids;
  for (const std::string& tok : split_ws(s)) {
    const auto dots = tok.find("..");
    if (dots == std::string::npos) {
      ids.push_back(static_cast<int>(parse_long(tok, what)) - 1);
    } else {
      const long a = parse_long(tok.substr(0, dots), what);
      const long b = parse_long(tok.substr(dots + 2), what);
      if (b < a) throw std::invalid_argument("empty id range in " + what + ": \"" + tok + "\"");
      for (long v = a; v <= b; ++v) ids.push_back(static_cast<int>(v) - 1);
    }
  }
  return ids;
}

Eigen::VectorXd parse_vector(const std::string& s, const std::string& what) {
  const auto toks = split_ws(s);
  if (toks.empty()) throw std::invalid_argument("empty vector for " + what);
  Eigen::VectorXd v(static_cast<Eigen::Index>(toks.size()));
  for (std::size_t i = 0; i < toks.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = parse_double(toks[i], what);
  return v;
}

// "rows [1 0 0 ; 0 1 0]" (brackets optional) -> row list
std::vector<std::vector<double>> parse_rows(std::string body, const std::string& what) {
  std::replace(body.begin(), body.end(), '[', ' ');
  std::replace(body.begin(), body.end(), ']', ' ');
  std::vector<std::vector<double>> rows;
  std::string part;
  std::istringstream in(body);
  while (std::getline(in, part, ';')) {
    const auto toks = split_ws(part);
    if (toks.empty()) continue;
    std::vector<double> row;
    row.reserve(toks.size());
    for (const auto& t : toks) row.push_back(parse_double(t, what));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct Line {
  std::string section;
  std::string key;    // empty for raw block lines
  std::string value;  // raw line content for block sections
};

}  // namespace

ScenarioConfig parse_scenario_text(const std::string& text) {
  ScenarioConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  std::string edges_block;
  bool saw_graph_section = false;
  int line_no = 0;

  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("scenario line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      section = lower(trim(line.substr(1, line.size() - 2)));
      if (section == "graph") saw_graph_section = true;
      continue;
    }

    if (section == "edges") {
      edges_block += line;
      edges_block += '\n';
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected \"key = value\"");
    const std::string raw_key = trim(line.substr(0, eq));
    const std::string key = lower(raw_key);
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) fail("empty key or value");

    if (section == "graph") {
      if (key == "type") {
        const std::string v = lower(value);
        if (v == "edgelist") cfg.graph.kind = GraphConfig::Kind::EdgeList;
        else if (v == "random_geometric" || v == "random")
          cfg.graph.kind = GraphConfig::Kind::RandomGeometric;
        else fail("unknown graph type \"" + value + "\"");
      } else if (key == "n") {
        cfg.graph.n = static_cast<int>(parse_long(value, "graph n"));
      } else if (key == "radius") {
        cfg.graph.radius = parse_double(value, "graph radius");
      } else if (key == "require_connected") {
        cfg.graph.require_connected = parse_bool(value, key);
      } else if (key == "require_subset_connected") {
        if (lower(value).rfind("role:", 0) == 0)
          cfg.graph.require_subset_role = lower(trim(value.substr(5)));
        else
          cfg.graph.require_subset_connected = parse_id_list(value, key);
      } else if (key == "retry_limit") {
        cfg.graph.retry_limit = static_cast<int>(parse_long(value, key));
      } else {
        fail("unknown graph key \"" + raw_key + "\"");
      }
    } else if (section == "sensing") {
      const auto toks = split_ws(raw_key);
      if (key == "noise_bound") {
        cfg.sensing.noise_bound = parse_double(value, key);
      } else if (key == "noise_mode") {
        const std::string v = lower(value);
        if (v == "ball") cfg.sensing.noise_mode = NoiseMode::UniformBall;
        else if (v == "constant") cfg.sensing.noise_mode = NoiseMode::WorstCaseConstant;
        else fail("unknown noise mode \"" + value + "\"");
      } else if (!toks.empty() && (lower(toks[0]) == "agent" || lower(toks[0]) == "agents")) {
        if (toks.size() != 2) fail("expected \"agents <ids> = <spec>\"");
        const std::vector<int> ids = parse_id_list(toks[1], "sensing agents");
        if (ids.empty()) fail("empty agent list");
        SensingAssignment a;
        a.first = *std::min_element(ids.begin(), ids.end());
        a.last = *std::max_element(ids.begin(), ids.end());
        if (static_cast<int>(ids.size()) != a.last - a.first + 1)
          fail("sensing assignments must use contiguous ranges");
        const std::string v = lower(value);
        if (v == "xy" || v == "z") {
          a.role = v;
        } else if (v.rfind("rows", 0) == 0) {
          a.rows = parse_rows(value.substr(4), "sensing rows");
          if (a.rows.empty()) fail("no rows given");
        } else {
          fail("unknown sensing spec \"" + value + "\"");
        }
        cfg.sensing.assignments.push_back(std::move(a));
      } else {
        fail("unknown sensing key \"" + raw_key + "\"");
      }
    } else if (section == "parameter") {
      if (key == "dim") cfg.parameter.dim = static_cast<int>(parse_long(value, key));
      else if (key == "eta") cfg.parameter.eta = parse_double(value, key);
      else if (key == "theta") {
        if (lower(value) == "random") cfg.parameter.theta.reset();
        else cfg.parameter.theta = parse_vector(value, key);
      } else fail("unknown parameter key \"" + raw_key + "\"");
    } else if (section == "params") {
      if (key == "method") {
        const std::string v = lower(value);
        if (v == "procedure1") cfg.params.method = ParamsConfig::Method::Procedure1;
        else if (v == "procedure2") cfg.params.method = ParamsConfig::Method::Procedure2;
        else if (v == "manual") cfg.params.method = ParamsConfig::Method::Manual;
        else fail("unknown params method \"" + value + "\"");
      } else if (key == "alpha_hat") cfg.params.alpha_hat = parse_double(value, key);
      else if (key == "beta_hat") cfg.params.beta_hat = parse_double(value, key);
      else if (key == "kappa1") cfg.params.kappa1 = parse_double(value, key);
      else if (key == "use_spectral_bounds") cfg.params.use_spectral_bounds = parse_bool(value, key);
      else if (key == "alpha") cfg.params.alpha = parse_double(value, key);
      else if (key == "beta") cfg.params.beta = parse_double(value, key);
      else if (key == "r1") cfg.params.r1 = parse_double(value, key);
      else fail("unknown params key \"" + raw_key + "\"");
    } else if (section == "adversary") {
      if (key == "members") cfg.adversary.members = parse_id_list(value, key);
      else if (key == "strategy") {
        const std::string v = lower(value);
        if (v == "none") cfg.adversary.strategy = AdversaryConfig::Strategy::None;
        else if (v == "null_space") cfg.adversary.strategy = AdversaryConfig::Strategy::NullSpace;
        else if (v == "fixed_offset") cfg.adversary.strategy = AdversaryConfig::Strategy::FixedOffset;
        else if (v == "threshold_riding")
          cfg.adversary.strategy = AdversaryConfig::Strategy::ThresholdRiding;
        else if (v == "script") cfg.adversary.strategy = AdversaryConfig::Strategy::Script;
        else fail("unknown strategy \"" + value + "\"");
      } else if (key == "offset") {
        const std::string v = lower(value);
        if (v == "max_feasible") cfg.adversary.offset.reset();
        else if (v == "saturate") cfg.adversary.offset.reset();
        else cfg.adversary.offset = parse_vector(value, key);
      } else if (key == "direction") {
        const Eigen::VectorXd d = parse_vector(value, key);
        cfg.adversary.saturate_direction = d;
        cfg.adversary.ride_direction = d;
      } else if (key == "ride_fraction") {
        cfg.adversary.ride_fraction = parse_double(value, key);
      } else if (key == "script") {
        cfg.adversary.script_path = value;
      } else {
        fail("unknown adversary key \"" + raw_key + "\"");
      }
    } else if (section == "run") {
      if (key == "rounds") cfg.rounds = parse_long(value, key);
      else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_long(value, key));
      else if (key == "record_estimates") cfg.record_estimates = parse_bool(value, key);
      else fail("unknown run key \"" + raw_key + "\"");
    } else if (section.empty()) {
      fail("key outside of any [section]");
    } else {
      fail("unknown section \"" + section + "\"");
    }
  }

  if (!edges_block.empty()) {
    cfg.graph.inline_graph = Graph::parse_edge_list(edges_block);
    if (!saw_graph_section) cfg.graph.kind = GraphConfig::Kind::EdgeList;
  }
  return cfg;
}

ScenarioConfig parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

BuiltinScenario builtin_by_name(const std::string& name) {
  const std::string v = lower(trim(name));
  if (v == "example1") return BuiltinScenario::Example1;
  if (v == "example2") return BuiltinScenario::Example2;
  if (v == "example3") return BuiltinScenario::Example3;
  if (v == "example4") return BuiltinScenario::Example4;
  throw std::invalid_argument("unknown builtin scenario \"" + name + "\" (example1..example4)");
}

ScenarioConfig builtin_scenario(BuiltinScenario which, std::uint64_t seed) {
  constexpr int n = 150;
  constexpr int z_count = 50;
  constexpr int adversarial_z = 35;

  // role draw: which agents carry the z sensor
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  Rng role_rng(seed, Stream::Roles);
  for (int i = 0; i < z_count; ++i) {
    const int j = i + static_cast<int>(role_rng.next_u64() %
                                       static_cast<std::uint64_t>(n - i));
    std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
  }
  std::vector<int> z_agents(ids.begin(), ids.begin() + z_count);
  std::sort(z_agents.begin(), z_agents.end());

  ScenarioConfig cfg;
  cfg.seed = seed;
  cfg.rounds = 5000;

  cfg.graph.kind = GraphConfig::Kind::RandomGeometric;
  cfg.graph.n = n;
  cfg.graph.radius = 0.15;
  cfg.graph.require_connected = true;
  cfg.graph.require_subset_role = "xy";
  cfg.graph.retry_limit = 1000;

  cfg.sensing.noise_bound = 0.03;
  cfg.sensing.noise_mode = NoiseMode::UniformBall;
  std::vector<char> is_z(static_cast<std::size_t>(n), 0);
  for (int a : z_agents) is_z[static_cast<std::size_t>(a)] = 1;
  for (int a = 0; a < n; ++a) {
    SensingAssignment assign;
    assign.first = a;
    assign.last = a;
    assign.role = is_z[static_cast<std::size_t>(a)] ? "z" : "xy";
    cfg.sensing.assignments.push_back(std::move(assign));
  }

  cfg.parameter.dim = 3;
  cfg.parameter.eta = 500.0;
  cfg.parameter.theta.reset();  // drawn uniformly in the prior ball

  cfg.params.method = ParamsConfig::Method::Procedure1;
  cfg.params.alpha_hat = 1.0;
  cfg.params.beta_hat = 10.0;

  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(3);
  e1(0) = 1.0;
  Eigen::VectorXd e3 = Eigen::VectorXd::Zero(3);
  e3(2) = 1.0;

  switch (which) {
    case BuiltinScenario::Example1:
      break;
    case BuiltinScenario::Example2:
      cfg.adversary.members = z_agents;
      cfg.adversary.strategy = AdversaryConfig::Strategy::NullSpace;
      break;
    case BuiltinScenario::Example3:
    case BuiltinScenario::Example4: {
      std::vector<int> pool = z_agents;
      Rng adv_rng(seed, Stream::Adversary);
      for (int i = 0; i < adversarial_z; ++i) {
        const int j = i + static_cast<int>(adv_rng.next_u64() %
                                           static_cast<std::uint64_t>(z_count - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
      }
      cfg.adversary.members.assign(pool.begin(), pool.begin() + adversarial_z);
      std::sort(cfg.adversary.members.begin(), cfg.adversary.members.end());
      if (which == BuiltinScenario::Example3) {
        cfg.adversary.strategy = AdversaryConfig::Strategy::FixedOffset;
        cfg.adversary.saturate_direction = e3;
        // the threshold needs time to decay past every agent's standing
        // disagreement before the detection saturates
        cfg.rounds = 10000;
      } else {
        cfg.adversary.strategy = AdversaryConfig::Strategy::ThresholdRiding;
        // ride along the locally observed x axis, where innovations absorb
        // the push; the fraction keeps the induced normal-to-normal spread
        // clear of the threshold through the whole decay
        cfg.adversary.ride_fraction = 0.05;
        cfg.adversary.ride_direction = e1;
      }
      break;
    }
  }
  return cfg;
}

namespace {

std::vector<Eigen::MatrixXd> assemble_sensing(const SensingConfig& sensing, int n, int m,
                                              std::vector<std::string>* roles_out) {
  std::vector<Eigen::MatrixXd> raw(static_cast<std::size_t>(n));
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  std::vector<std::string> roles(static_cast<std::size_t>(n));
  for (const SensingAssignment& a : sensing.assignments) {
    if (a.first < 0 || a.last >= n || a.first > a.last)
      throw std::invalid_argument("sensing assignment range out of bounds");
    Eigen::MatrixXd h;
    if (!a.role.empty()) {
      if (m != 3)
        throw std::invalid_argument("role shorthands need parameter dimension 3");
      if (a.role == "xy") {
        h = Eigen::MatrixXd::Zero(2, 3);
        h(0, 0) = 1.0;
        h(1, 1) = 1.0;
      } else if (a.role == "z") {
        h = Eigen::MatrixXd::Zero(1, 3);
        h(0, 2) = 1.0;
      } else {
        throw std::invalid_argument("unknown sensing role \"" + a.role + "\"");
      }
    } else {
      h.resize(static_cast<Eigen::Index>(a.rows.size()), m);
      for (std::size_t r = 0; r < a.rows.size(); ++r) {
        if (static_cast<int>(a.rows[r].size()) != m)
          throw std::invalid_argument("sensing row width does not match parameter dimension");
        for (int c = 0; c < m; ++c) h(static_cast<Eigen::Index>(r), c) = a.rows[r][static_cast<std::size_t>(c)];
      }
    }
    for (int id = a.first; id <= a.last; ++id) {
      raw[static_cast<std::size_t>(id)] = h;
      covered[static_cast<std::size_t>(id)] = 1;
      roles[static_cast<std::size_t>(id)] = a.role;
    }
  }
  for (int id = 0; id < n; ++id)
    if (!covered[static_cast<std::size_t>(id)])
      throw std::invalid_argument("agent " + std::to_string(id + 1) +
                                  " has no sensing assignment");
  if (roles_out) *roles_out = std::move(roles);
  return raw;
}

Eigen::VectorXd draw_theta(int m, double eta, std::uint64_t seed) {
  Rng rng(seed, Stream::Theta);
  Eigen::VectorXd v(m);
  double norm = 0.0;
  do {
    for (int i = 0; i < m; ++i) v(i) = rng.next_gaussian();
    norm = v.norm();
  } while (norm == 0.0);
  const double radius = eta * std::pow(rng.next_double(), 1.0 / static_cast<double>(m));
  return v * (radius / norm);
}

}  // namespace

Instance build_instance(const ScenarioConfig& cfg) {
  const int m = cfg.parameter.dim;
  if (m < 1) throw std::invalid_argument("parameter dimension must be set");
  if (!(cfg.parameter.eta >= 0.0)) throw std::invalid_argument("eta must be nonnegative");

  int n = 0;
  if (cfg.graph.kind == GraphConfig::Kind::EdgeList) {
    if (!cfg.graph.inline_graph)
      throw std::invalid_argument("edge-list scenario without an [edges] block");
    n = cfg.graph.inline_graph->num_vertices();
  } else {
    n = cfg.graph.n;
    if (n < 1) throw std::invalid_argument("random graph needs n >= 1");
  }

  std::vector<std::string> roles;
  std::vector<Eigen::MatrixXd> raw = assemble_sensing(cfg.sensing, n, m, &roles);
  SensingModel model = normalize_sensing(std::move(raw), cfg.sensing.noise_bound);

  Graph graph = [&] {
    if (cfg.graph.kind == GraphConfig::Kind::EdgeList) return *cfg.graph.inline_graph;
    GeometricConstraints constraints;
    constraints.require_connected = cfg.graph.require_connected;
    constraints.retry_limit = cfg.graph.retry_limit;
    if (!cfg.graph.require_subset_connected.empty()) {
      constraints.connected_subset = cfg.graph.require_subset_connected;
    } else if (!cfg.graph.require_subset_role.empty()) {
      for (int id = 0; id < n; ++id)
        if (roles[static_cast<std::size_t>(id)] == cfg.graph.require_subset_role)
          constraints.connected_subset.push_back(id);
      if (constraints.connected_subset.empty())
        throw std::invalid_argument("no agent carries role \"" +
                                    cfg.graph.require_subset_role + "\"");
    }
    return random_geometric(n, cfg.graph.radius, cfg.seed, constraints);
  }();

  Eigen::VectorXd theta = cfg.parameter.theta
                              ? *cfg.parameter.theta
                              : draw_theta(m, cfg.parameter.eta, cfg.seed);
  ParameterSpec spec(std::move(theta), cfg.parameter.eta);

  FrdeParams params;
  switch (cfg.params.method) {
    case ParamsConfig::Method::Procedure1:
      params = procedure1(graph, model, cfg.params.alpha_hat, cfg.params.beta_hat);
      break;
    case ParamsConfig::Method::Procedure2: {
      double lambda2 = 0.0, lambda_max_l = 0.0;
      if (cfg.params.use_spectral_bounds) {
        lambda2 = 4.0 / (static_cast<double>(n) * static_cast<double>(n));
        lambda_max_l = static_cast<double>(n);
      } else {
        const EigenResult eig = eig_sym(SymmetricMatrix(laplacian(graph)), false);
        if (eig.eigenvalues.size() < 2)
          throw std::invalid_argument("procedure2 needs at least two agents");
        lambda2 = eig.eigenvalues(1);
        lambda_max_l = eig.eigenvalues(eig.eigenvalues.size() - 1);
      }
      const std::vector<int> everyone = all_agents(graph);
      const Eigen::MatrixXd gram = gram_average(model, everyone);
      const double gmin = min_eig(SymmetricMatrix(0.5 * (gram + gram.transpose())));
      params = procedure2(lambda2, lambda_max_l, gmin, n, cfg.params.kappa1);
      break;
    }
    case ParamsConfig::Method::Manual:
      params.alpha = cfg.params.alpha;
      params.beta = cfg.params.beta;
      params.r1 = cfg.params.r1;
      params.provenance = ParamProvenance::Manual;
      break;
  }

  AdversarySet adversaries = AdversarySet::of(n, cfg.adversary.members);
  std::optional<AttackStrategy> attack;
  if (cfg.adversary.strategy != AdversaryConfig::Strategy::None) {
    if (adversaries.empty())
      throw std::invalid_argument("attack strategy given without adversary members");
    switch (cfg.adversary.strategy) {
      case AdversaryConfig::Strategy::NullSpace:
        attack = synthesize_null_space_attack(
            model, adversaries.complement, spec,
            cfg.adversary.offset ? MagnitudePolicy::Given : MagnitudePolicy::MaxFeasible,
            cfg.adversary.offset ? &*cfg.adversary.offset : nullptr);
        break;
      case AdversaryConfig::Strategy::FixedOffset: {
        Eigen::VectorXd offset;
        if (cfg.adversary.offset) {
          offset = *cfg.adversary.offset;
        } else if (cfg.adversary.saturate_direction) {
          offset = saturate_offset(spec.theta_star, spec.eta, *cfg.adversary.saturate_direction);
        } else {
          throw std::invalid_argument("fixed_offset needs an offset or a direction");
        }
        attack = fixed_offset_attack(std::move(offset));
        break;
      }
      case AdversaryConfig::Strategy::ThresholdRiding:
        if (!cfg.adversary.ride_direction)
          throw std::invalid_argument("threshold_riding needs a direction");
        attack = threshold_riding_attack(cfg.adversary.ride_fraction,
                                         *cfg.adversary.ride_direction);
        break;
      case AdversaryConfig::Strategy::Script: {
        if (cfg.adversary.script) {
          attack = scripted_attack(*cfg.adversary.script);
        } else {
          if (cfg.adversary.script_path.empty())
            throw std::invalid_argument("script strategy needs a script file");
          std::ifstream in(cfg.adversary.script_path);
          if (!in)
            throw std::runtime_error("cannot open script file: " + cfg.adversary.script_path);
          std::ostringstream buf;
          buf << in.rdbuf();
          attack = scripted_attack(ScriptTable::parse(buf.str(), m));
        }
        break;
      }
      case AdversaryConfig::Strategy::None:
        break;
    }
  } else if (!adversaries.empty()) {
    throw std::invalid_argument("adversary members given without a strategy");
  }

  return Instance{std::move(graph),
                  std::move(model),
                  std::move(spec),
                  params,
                  std::move(adversaries),
                  std::move(attack),
                  cfg.sensing.noise_mode,
                  cfg.rounds,
                  cfg.seed,
                  cfg.record_estimates};
}

std::string params_report(const Instance& instance) {
  const Certificate cert = certify(instance.params, instance.graph, instance.model);
  std::ostringstream out;
  char buf[32];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  const char* provenance = "manual";
  if (instance.params.provenance == ParamProvenance::Procedure1) provenance = "procedure1";
  if (instance.params.provenance == ParamProvenance::Procedure2) provenance = "procedure2";
  out << "alpha = " << fmt(instance.params.alpha) << "\n"
      << "beta = " << fmt(instance.params.beta) << "\n"
      << "r1 = " << fmt(instance.params.r1) << "\n"
      << "provenance = " << provenance << "\n"
      << "lambda_min_J = " << fmt(cert.lambda_min) << "\n"
      << "lambda_max_J = " << fmt(cert.lambda_max) << "\n"
      << "spectral_margin = " << fmt(cert.spectral_margin) << "\n"
      << "r1_margin = " << fmt(cert.r1_margin) << "\n"
      << "condition_spectral = " << (cert.spectral_ok ? "pass" : "fail") << "\n"
      << "condition_r1 = " << (cert.r1_ok ? "pass" : "fail") << "\n"
      << "certified = " << (cert.pass() ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace frde
