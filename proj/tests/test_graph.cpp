#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <set>

#include "frde/graph.hpp"
#include "frde/spectral.hpp"

using namespace frde;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("laplacian basics") {
  SUBCASE("single vertex, no edges") {
    const Eigen::MatrixXd l = laplacian(Graph(1, {}));
    REQUIRE(l.rows() == 1);
    CHECK(l(0, 0) == 0.0);
  }
  SUBCASE("two-vertex path") {
    const Eigen::MatrixXd l = laplacian(Graph(2, {{0, 1}}));
    Eigen::MatrixXd expected(2, 2);
    expected << 1, -1, -1, 1;
    CHECK((l - expected).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("triangle eigenvalues are 0, 3, 3") {
    // char poly of the 3x3 triangle laplacian, computed by hand:
    // -t^3 + 6 t^2 - 9 t = -t (t - 3)^2
    const EigenResult eig = eig_sym(SymmetricMatrix(laplacian(triangle())), false);
    CHECK(eig.eigenvalues(0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(eig.eigenvalues(1) == doctest::Approx(3.0));
    CHECK(eig.eigenvalues(2) == doctest::Approx(3.0));
  }
}

TEST_CASE("constructor rejects malformed graphs") {
  CHECK_THROWS(Graph(2, {{0, 0}}));          // self loop
  CHECK_THROWS(Graph(2, {{0, 1}, {1, 0}}));  // duplicate under symmetry
  CHECK_THROWS(Graph(2, {{0, 2}}));          // endpoint out of range
  CHECK_THROWS(Graph(0, {}));
}

TEST_CASE("connectivity of induced subsets") {
  const Graph t = triangle();
  const Graph p = path3();
  const std::vector<int> all{0, 1, 2};
  const std::vector<int> ends{0, 2};
  const std::vector<int> pair{0, 1};
  CHECK(is_connected(t, all));
  CHECK_FALSE(is_connected(p, ends));
  CHECK(is_connected(p, pair));
  CHECK_THROWS_WITH(is_connected(p, std::vector<int>{}), "empty vertex set");
}

TEST_CASE("induced laplacians") {
  Eigen::MatrixXd edge(2, 2);
  edge << 1, -1, -1, 1;
  const std::vector<int> pair{0, 1};
  const std::vector<int> ends{0, 2};
  CHECK((induced_laplacian(path3(), pair) - edge).cwiseAbs().maxCoeff() == 0.0);
  CHECK(induced_laplacian(path3(), ends).cwiseAbs().maxCoeff() == 0.0);
  CHECK((induced_laplacian(triangle(), pair) - edge).cwiseAbs().maxCoeff() == 0.0);

  SUBCASE("full vertex set in identity order reproduces the laplacian") {
    const std::vector<int> all{0, 1, 2};
    CHECK((induced_laplacian(triangle(), all) - laplacian(triangle())).cwiseAbs().maxCoeff() ==
          0.0);
  }
}

TEST_CASE("boundary degrees") {
  SUBCASE("path, subset {1,2}") {
    const auto p = SubsetPartition::of(path3(), std::vector<int>{0, 1});
    const Eigen::VectorXd sigma = boundary_degrees(path3(), p);
    CHECK(sigma(0) == 0.0);
    CHECK(sigma(1) == 1.0);
  }
  SUBCASE("triangle, single vertex") {
    const auto p = SubsetPartition::of(triangle(), std::vector<int>{0});
    CHECK(boundary_degrees(triangle(), p)(0) == 2.0);
  }
  SUBCASE("empty complement") {
    const auto p = SubsetPartition::of(triangle(), std::vector<int>{0, 1, 2});
    CHECK(boundary_degrees(triangle(), p).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("random geometric generator") {
  SUBCASE("single vertex") {
    const Graph g = random_geometric(1, 0.5, 7);
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 0);
  }
  SUBCASE("radius sqrt(2) connects any pair") {
    const Graph g = random_geometric(2, std::sqrt(2.0), 11);
    CHECK(g.num_edges() == 1);
  }
  SUBCASE("same seed, same graph") {
    const Graph a = random_geometric(40, 0.3, 1234);
    const Graph b = random_geometric(40, 0.3, 1234);
    CHECK(a.to_edge_list() == b.to_edge_list());
  }
  SUBCASE("different seeds differ") {
    const Graph a = random_geometric(40, 0.3, 1);
    const Graph b = random_geometric(40, 0.3, 2);
    CHECK(a.to_edge_list() != b.to_edge_list());
  }
  SUBCASE("impossible constraint exhausts retries") {
    GeometricConstraints c;
    c.require_connected = true;
    c.retry_limit = 5;
    CHECK_THROWS_WITH(random_geometric(50, 0.01, 3, c),
                      "constraint unsatisfiable at this radius");
  }
  SUBCASE("subset constraint holds") {
    GeometricConstraints c;
    c.require_connected = true;
    c.connected_subset = {0, 1, 2, 3, 4};
    const Graph g = random_geometric(30, 0.45, 5, c);
    CHECK(is_connected(g, c.connected_subset));
  }
}

TEST_CASE("spectral invariants of generated laplacians") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    GeometricConstraints c;
    c.require_connected = true;
    const int n = 10 + static_cast<int>(seed) * 6;
    const Graph g = random_geometric(n, 0.45, seed, c);
    const Eigen::MatrixXd l = laplacian(g);
    CHECK((l - l.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(l.rowwise().sum().cwiseAbs().maxCoeff() <= 1e-12);
    const EigenResult eig = eig_sym(SymmetricMatrix(l), false);
    CHECK(std::abs(eig.eigenvalues(0)) <= 1e-9);
    // connected-graph bounds: lambda_2 >= 4/N^2, lambda_max <= N
    CHECK(eig.eigenvalues(1) > 0.0);
    CHECK(eig.eigenvalues(1) >= 4.0 / (static_cast<double>(n) * n) - 1e-12);
    CHECK(eig.eigenvalues(n - 1) <= static_cast<double>(n) + 1e-9);
  }
}

TEST_CASE("edge list text round trip") {
  const Graph g = random_geometric(12, 0.5, 99);
  const Graph back = Graph::parse_edge_list(g.to_edge_list());
  CHECK(back.to_edge_list() == g.to_edge_list());
  CHECK_THROWS(Graph::parse_edge_list("3\n1 2\n"));  // missing "n"
}

}  // TEST_SUITE
