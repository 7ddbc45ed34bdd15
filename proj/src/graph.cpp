#include "frde/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "frde/rng.hpp"

namespace frde {

Graph::Graph(int n_vertices, std::vector<std::pair<int, int>> edges)
    : n_(n_vertices) {
  if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self loops are not allowed");
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  adj_.resize(static_cast<std::size_t>(n_));
  for (auto [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = neighbors(u);
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  int n = 0;
  if (!(in >> tag) || tag != "n" || !(in >> n))
    throw std::invalid_argument("edge list must start with \"n <count>\"");
  std::vector<std::pair<int, int>> edges;
  int u = 0, v = 0;
  while (in >> u >> v) edges.emplace_back(u - 1, v - 1);
  if (!in.eof()) throw std::invalid_argument("malformed edge pair");
  return Graph(n, std::move(edges));
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  out << "n " << n_ << "\n";
  for (auto [u, v] : edges_) out << (u + 1) << " " << (v + 1) << "\n";
  return out.str();
}

SubsetPartition SubsetPartition::of(const Graph& g, std::span<const int> subset) {
  SubsetPartition p;
  std::vector<char> in_subset(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v : subset) {
    if (v < 0 || v >= g.num_vertices())
      throw std::invalid_argument("subset vertex out of range");
    if (in_subset[static_cast<std::size_t>(v)])
      throw std::invalid_argument("subset vertex repeated");
    in_subset[static_cast<std::size_t>(v)] = 1;
    p.subset.push_back(v);
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!in_subset[static_cast<std::size_t>(v)]) p.complement.push_back(v);
  return p;
}

Eigen::MatrixXd laplacian(const Graph& g) {
  const int n = g.num_vertices();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    l(u, u) += 1.0;
    l(v, v) += 1.0;
    l(u, v) -= 1.0;
    l(v, u) -= 1.0;
  }
  return l;
}

namespace {

// BFS over the subgraph induced by `keep` (null = whole graph).
bool bfs_covers(const Graph& g, const std::vector<char>* keep, int start, int target_count) {
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::queue<int> frontier;
  frontier.push(start);
  seen[static_cast<std::size_t>(start)] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : g.neighbors(v)) {
      if (keep && !(*keep)[static_cast<std::size_t>(w)]) continue;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == target_count;
}

}  // namespace

bool is_connected(const Graph& g) {
  return bfs_covers(g, nullptr, 0, g.num_vertices());
}

bool is_connected(const Graph& g, std::span<const int> subset) {
  if (subset.empty()) throw std::invalid_argument("empty vertex set");
  std::vector<char> keep(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v : subset) {
    if (v < 0 || v >= g.num_vertices())
      throw std::invalid_argument("subset vertex out of range");
    keep[static_cast<std::size_t>(v)] = 1;
  }
  return bfs_covers(g, &keep, subset[0], static_cast<int>(subset.size()));
}

Eigen::MatrixXd induced_laplacian(const Graph& g, std::span<const int> subset) {
  if (subset.empty()) throw std::invalid_argument("empty vertex set");
  const int k = static_cast<int>(subset.size());
  std::vector<int> pos(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int i = 0; i < k; ++i) {
    const int v = subset[static_cast<std::size_t>(i)];
    if (v < 0 || v >= g.num_vertices())
      throw std::invalid_argument("subset vertex out of range");
    if (pos[static_cast<std::size_t>(v)] != -1)
      throw std::invalid_argument("subset vertex repeated");
    pos[static_cast<std::size_t>(v)] = i;
  }
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    const int v = subset[static_cast<std::size_t>(i)];
    for (int w : g.neighbors(v)) {
      const int j = pos[static_cast<std::size_t>(w)];
      if (j < 0) continue;
      l(i, i) += 1.0;
      l(i, j) -= 1.0;
    }
  }
  return l;
}

Eigen::VectorXd boundary_degrees(const Graph& g, const SubsetPartition& partition) {
  std::vector<char> in_complement(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v : partition.complement) in_complement[static_cast<std::size_t>(v)] = 1;
  Eigen::VectorXd sigma(static_cast<Eigen::Index>(partition.subset.size()));
  for (std::size_t i = 0; i < partition.subset.size(); ++i) {
    int count = 0;
    for (int w : g.neighbors(partition.subset[i]))
      if (in_complement[static_cast<std::size_t>(w)]) ++count;
    sigma(static_cast<Eigen::Index>(i)) = count;
  }
  return sigma;
}

Graph random_geometric(int n, double radius, std::uint64_t seed,
                       const GeometricConstraints& constraints,
                       std::vector<std::pair<double, double>>* positions_out) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  if (!(radius > 0.0) || radius > std::sqrt(2.0) + 1e-12)
    throw std::invalid_argument("radius must be in (0, sqrt(2)]");
  const double r2 = radius * radius;

  for (int attempt = 0; attempt < constraints.retry_limit; ++attempt) {
    Rng rng(seed, Stream::Graph, static_cast<std::uint64_t>(attempt));
    std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(n));
    for (auto& p : pts) {
      p.first = rng.next_double();
      p.second = rng.next_double();
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const double dx = pts[static_cast<std::size_t>(u)].first - pts[static_cast<std::size_t>(v)].first;
        const double dy = pts[static_cast<std::size_t>(u)].second - pts[static_cast<std::size_t>(v)].second;
        if (dx * dx + dy * dy <= r2) edges.emplace_back(u, v);
      }
    }
    Graph g(n, std::move(edges));
    if (constraints.require_connected && !is_connected(g)) continue;
    if (!constraints.connected_subset.empty() &&
        !is_connected(g, constraints.connected_subset))
      continue;
    if (positions_out) *positions_out = std::move(pts);
    return g;
  }
  throw std::runtime_error("constraint unsatisfiable at this radius");
}

}  // namespace frde
