#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>

#include "frde/rng.hpp"
#include "frde/sensing.hpp"
#include "frde/spectral.hpp"

using namespace frde;

namespace {

Eigen::MatrixXd row(std::initializer_list<double> vals) {
  Eigen::MatrixXd m(1, static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (double v : vals) m(0, i++) = v;
  return m;
}

}  // namespace

TEST_SUITE("sensing") {

TEST_CASE("normalization scales over-unit sensors and the noise bound") {
  SUBCASE("[2 0] is halved") {
    const SensingModel m = normalize_sensing({row({2, 0})}, 1.0);
    CHECK(m.h(0)(0, 0) == doctest::Approx(1.0));
    CHECK(m.h(0)(0, 1) == 0.0);
    CHECK(m.noise_bound() == doctest::Approx(0.5));
  }
  SUBCASE("unit spectral norm is untouched") {
    const SensingModel m = normalize_sensing({row({1, 0}), row({0, 1})}, 0.7);
    CHECK(m.h(0)(0, 0) == 1.0);
    CHECK(m.h(1)(0, 1) == 1.0);
    CHECK(m.noise_bound() == doctest::Approx(0.7));
  }
  SUBCASE("3*I is scaled to I") {
    const SensingModel m = normalize_sensing({3.0 * Eigen::MatrixXd::Identity(2, 2)}, 0.3);
    CHECK((m.h(0) - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(m.noise_bound() == doctest::Approx(0.1));
  }
  SUBCASE("post-normalization invariant holds for random matrices") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed, Stream::Roles, 0xBEEF);
      const int rows = 1 + static_cast<int>(rng.next_u64() % 3);
      Eigen::MatrixXd h(rows, 3);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < 3; ++c) h(r, c) = 5.0 * rng.next_gaussian();
      const SensingModel m = normalize_sensing({h}, 1.0);
      const Eigen::MatrixXd gram = m.h(0).transpose() * m.h(0);
      CHECK(max_eig(SymmetricMatrix(0.5 * (gram + gram.transpose()))) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("global observability") {
  const SensingModel m = normalize_sensing({row({1, 0}), row({0, 1})}, 0.0);
  const std::vector<int> both{0, 1};
  const std::vector<int> first{0};
  CHECK(is_globally_observable(m, both));
  CHECK_FALSE(is_globally_observable(m, first));
  CHECK_FALSE(is_globally_observable(m, std::vector<int>{}));
  SUBCASE("zero sensors are unobservable") {
    const SensingModel z = normalize_sensing(
        {Eigen::MatrixXd::Zero(1, 2), Eigen::MatrixXd::Zero(1, 2)}, 0.0);
    CHECK_FALSE(is_globally_observable(z, both));
  }
}

TEST_CASE("measurements") {
  const ParameterSpec spec((Eigen::VectorXd(2) << 3.0, -4.0).finished(), 10.0);

  SUBCASE("noiseless measurements are exact") {
    const SensingModel m = normalize_sensing({Eigen::MatrixXd::Identity(2, 2)}, 0.0);
    const Measurement y = measure(m, spec, 0, 17, 42);
    CHECK((y.value - spec.theta_star).norm() == 0.0);
  }
  SUBCASE("zero-row sensor yields an empty measurement") {
    const SensingModel m = normalize_sensing(
        {Eigen::MatrixXd::Zero(0, 2), Eigen::MatrixXd::Identity(2, 2)}, 0.5);
    const Measurement y = measure(m, spec, 0, 0, 1);
    CHECK(y.value.size() == 0);
  }
  SUBCASE("noise draws stay in the ball and exercise it") {
    const double b = 0.25;
    double max_norm = 0.0;
    for (long round = 0; round < 10000; ++round) {
      const Eigen::VectorXd w = noise_draw(3, b, 2, round, 99, NoiseMode::UniformBall);
      const double n = w.norm();
      CHECK(n <= b * (1.0 + 1e-12));
      max_norm = std::max(max_norm, n);
    }
    CHECK(max_norm >= 0.9 * b);
  }
  SUBCASE("draws are deterministic per (seed, agent, round)") {
    const Eigen::VectorXd a = noise_draw(3, 1.0, 5, 70, 1234, NoiseMode::UniformBall);
    const Eigen::VectorXd b = noise_draw(3, 1.0, 5, 70, 1234, NoiseMode::UniformBall);
    const Eigen::VectorXd c = noise_draw(3, 1.0, 5, 71, 1234, NoiseMode::UniformBall);
    CHECK((a - b).norm() == 0.0);
    CHECK((a - c).norm() != 0.0);
  }
  SUBCASE("worst-case mode pins the norm at the bound") {
    const Eigen::VectorXd w = noise_draw(4, 0.3, 0, 0, 7, NoiseMode::WorstCaseConstant);
    CHECK(w.norm() == doctest::Approx(0.3).epsilon(1e-12));
  }
}

TEST_CASE("validation") {
  CHECK_THROWS(ParameterSpec((Eigen::VectorXd(1) << 2.0).finished(), 1.0));
  CHECK_THROWS(SensingModel({row({2, 0})}, 0.1));  // over-unit without normalization
  CHECK_THROWS(normalize_sensing({}, 0.1));
  Eigen::MatrixXd nan_row = row({1, 0});
  nan_row(0, 0) = std::nan("");
  CHECK_THROWS(normalize_sensing({nan_row}, 0.1));
}

}  // TEST_SUITE
