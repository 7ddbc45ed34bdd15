#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <limits>

#include "frde/rng.hpp"
#include "frde/spectral.hpp"

using namespace frde;

TEST_SUITE("spectral") {

TEST_CASE("eigenvalues of small fixed matrices") {
  SUBCASE("identity") {
    const EigenResult eig = eig_sym(SymmetricMatrix(Eigen::MatrixXd::Identity(3, 3)), false);
    for (int i = 0; i < 3; ++i) CHECK(eig.eigenvalues(i) == doctest::Approx(1.0));
  }
  SUBCASE("[[2,-1],[-1,1]] has roots of t^2 - 3t + 1") {
    Eigen::MatrixXd m(2, 2);
    m << 2, -1, -1, 1;
    const EigenResult eig = eig_sym(SymmetricMatrix(m), false);
    CHECK(eig.eigenvalues(0) == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK(eig.eigenvalues(1) == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("min and max eigenvalues") {
  SUBCASE("zero matrix") {
    const SymmetricMatrix z(Eigen::MatrixXd::Zero(4, 4));
    CHECK(min_eig(z) == doctest::Approx(0.0));
    CHECK(max_eig(z) == doctest::Approx(0.0));
  }
  SUBCASE("diagonal") {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
    d(0, 0) = 0.2;
    d(1, 1) = 5.0;
    CHECK(min_eig(SymmetricMatrix(d)) == doctest::Approx(0.2));
    CHECK(max_eig(SymmetricMatrix(d)) == doctest::Approx(5.0));
  }
  SUBCASE("4x4 two-agent system matrix") {
    // decouples into [[2,-1],[-1,1]] and [[1,-1],[-1,2]] blocks
    Eigen::MatrixXd j(4, 4);
    j << 2, 0, -1, 0,
         0, 1, 0, -1,
        -1, 0, 1, 0,
         0, -1, 0, 2;
    CHECK(min_eig(SymmetricMatrix(j)) ==
          doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK(max_eig(SymmetricMatrix(j)) ==
          doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("random symmetric matrices: trace identity and orthonormal vectors") {
  for (const int dim : {5, 50, 500}) {
    Rng rng(2024, Stream::Roles, static_cast<std::uint64_t>(dim));
    Eigen::MatrixXd m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = rng.next_gaussian();
    const SymmetricMatrix sym(m);
    const EigenResult eig = eig_sym(sym, true);
    const double scale = eig.eigenvalues.cwiseAbs().maxCoeff();
    CHECK(std::abs(m.trace() - eig.eigenvalues.sum()) <= 1e-8 * scale * dim);
    const Eigen::MatrixXd vtv = eig.eigenvectors->transpose() * *eig.eigenvectors;
    CHECK((vtv - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff() <= 1e-8);
    // reconstruction residual per pair
    const Eigen::MatrixXd residual =
        m * *eig.eigenvectors - *eig.eigenvectors * eig.eigenvalues.asDiagonal();
    CHECK(residual.cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, scale) * dim);
  }
}

TEST_CASE("null space extraction") {
  SUBCASE("coordinate null space of a 1x2 row") {
    Eigen::MatrixXd m(1, 2);
    m << 1, 0;
    const Eigen::MatrixXd basis = null_space_basis(m);
    REQUIRE(basis.cols() == 1);
    CHECK(std::abs(basis(0, 0)) <= 1e-12);
    CHECK(std::abs(basis(1, 0)) == doctest::Approx(1.0));
  }
  SUBCASE("invertible matrix has an empty basis") {
    CHECK(null_space_basis(Eigen::MatrixXd::Identity(3, 3)).cols() == 0);
  }
  SUBCASE("stacked xy rows leave the z coordinate unobserved") {
    Eigen::MatrixXd m(4, 3);
    m << 1, 0, 0,
         0, 1, 0,
         1, 0, 0,
         0, 1, 0;
    const Eigen::MatrixXd basis = null_space_basis(m);
    REQUIRE(basis.cols() == 1);
    CHECK(std::abs(basis(2, 0)) == doctest::Approx(1.0));
  }
  SUBCASE("null vectors are actually null") {
    Rng rng(7, Stream::Roles, 0);
    // rank-2 4x4 built from an outer product
    Eigen::MatrixXd a(4, 2), b(2, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 2; ++j) {
        a(i, j) = rng.next_gaussian();
        b(j, i) = rng.next_gaussian();
      }
    const Eigen::MatrixXd m = a * b;
    const Eigen::MatrixXd basis = null_space_basis(m);
    REQUIRE(basis.cols() == 2);
    for (int c = 0; c < basis.cols(); ++c)
      CHECK((m * basis.col(c)).norm() <= 1e-8 * m.norm());
    CHECK((basis.transpose() * basis - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <=
          1e-10);
  }
}

TEST_CASE("invalid inputs") {
  Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_WITH(SymmetricMatrix{bad}, "invalid matrix");
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 0, 0;
  CHECK_THROWS(SymmetricMatrix{asym});
  CHECK_THROWS(null_space_basis(bad));
}

}  // TEST_SUITE
