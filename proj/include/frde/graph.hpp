#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace frde {

/// Undirected simple graph on vertices 0..n-1. Vertex ids are 1-based in the
/// edge-list text form only; everything in memory is 0-based. Immutable after
/// construction.
class Graph {
 public:
  Graph(int n_vertices, std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  /// Text form: first line "n <count>", then one "u v" pair per line (1-based).
  static Graph parse_edge_list(const std::string& text);
  std::string to_edge_list() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;  // canonical u < v, sorted
  std::vector<std::vector<int>> adj_;       // sorted neighbor lists
};

/// A subset of vertices together with its complement. Subset order is
/// preserved as given; the complement is ascending.
struct SubsetPartition {
  std::vector<int> subset;
  std::vector<int> complement;

  static SubsetPartition of(const Graph& g, std::span<const int> subset);
};

/// Laplacian L = D - A (dense, symmetric, zero row sums).
Eigen::MatrixXd laplacian(const Graph& g);

bool is_connected(const Graph& g);

/// Connectivity of the subgraph induced by `subset` (breadth-first search).
/// Throws on an empty subset or invalid ids.
bool is_connected(const Graph& g, std::span<const int> subset);

/// Laplacian of the induced subgraph, rows/columns in subset order.
Eigen::MatrixXd induced_laplacian(const Graph& g, std::span<const int> subset);

/// Diagonal of the boundary-degree matrix: for each subset vertex, the number
/// of its neighbors that lie in the complement.
Eigen::VectorXd boundary_degrees(const Graph& g, const SubsetPartition& partition);

struct GeometricConstraints {
  bool require_connected = false;
  std::vector<int> connected_subset;  // must induce a connected subgraph (empty = off)
  int retry_limit = 1000;
};

/// Random geometric graph: n placements uniform in the unit square, edge iff
/// Euclidean distance <= radius. Placements are resampled until the
/// constraints hold; throws after retry_limit failed attempts. Deterministic
/// per seed.
Graph random_geometric(int n, double radius, std::uint64_t seed,
                       const GeometricConstraints& constraints = {},
                       std::vector<std::pair<double, double>>* positions_out = nullptr);

}  // namespace frde
