#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "ionraman/constants.hpp"
#include "ionraman/trapmodes.hpp"

using namespace ionraman;

namespace {

trapmodes::TrapConfig cfg(int n) {
  return {n, constants::two_pi * 1.0e6, constants::ca40_mass};
}

// bisection oracle for the outer-ion force balance of the 3-ion chain:
// a = 1/a^2 + 1/(2a)^2  =>  a^3 = 5/4
double three_ion_edge_oracle() {
  auto force = [](double a) { return a - 1.0 / (a * a) - 1.0 / (4.0 * a * a); };
  double lo = 0.5, hi = 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (force(mid) > 0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("equilibrium positions, small chains") {
  CHECK(trapmodes::equilibrium_positions(1) == std::vector<double>{0.0});

  const auto two = trapmodes::equilibrium_positions(2);
  const double half_gap = std::pow(2.0, -2.0 / 3.0);
  REQUIRE(two.size() == 2);
  CHECK(std::abs(two[0] + half_gap) <= 1e-12);
  CHECK(std::abs(two[1] - half_gap) <= 1e-12);

  const auto three = trapmodes::equilibrium_positions(3);
  const double edge = three_ion_edge_oracle();
  REQUIRE(three.size() == 3);
  CHECK(std::abs(three[0] + edge) <= 1e-10);
  CHECK(std::abs(three[1]) <= 1e-12);
  CHECK(std::abs(three[2] - edge) <= 1e-10);
  CHECK(edge == doctest::Approx(1.0772).epsilon(1e-4));

  CHECK_THROWS_AS(trapmodes::equilibrium_positions(0), std::invalid_argument);
  CHECK_THROWS_AS(trapmodes::equilibrium_positions(51), std::invalid_argument);
}

TEST_CASE("equilibrium positions are antisymmetric and force-free") {
  for (int n : {2, 3, 5, 8, 13, 20}) {
    const auto u = trapmodes::equilibrium_positions(n);
    for (int s = 0; s < n; ++s) CHECK(std::abs(u[s] + u[n - 1 - s]) <= 1e-12);
    for (int s = 0; s < n; ++s) {
      double force = u[s];
      for (int t = 0; t < n; ++t) {
        if (t == s) continue;
        const double d = u[s] - u[t];
        force -= (d > 0 ? 1.0 : -1.0) / (d * d);
      }
      CHECK(std::abs(force) <= 1e-12);
    }
  }
}

TEST_CASE("mode eigensystem, N=2 analytic") {
  const auto modes = trapmodes::mode_eigensystem(cfg(2));
  REQUIRE(modes.mu.size() == 2);
  CHECK(modes.mu(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(modes.mu(1) == doctest::Approx(3.0).epsilon(1e-12));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(modes.b(0, 0) - r) <= 1e-10);
  CHECK(std::abs(modes.b(0, 1) - r) <= 1e-10);
  // stretch mode, up to overall sign
  CHECK(std::abs(std::abs(modes.b(1, 0)) - r) <= 1e-10);
  CHECK(std::abs(std::abs(modes.b(1, 1)) - r) <= 1e-10);
  CHECK(modes.b(1, 0) * modes.b(1, 1) < 0);
}

TEST_CASE("mode eigensystem, N=3 includes 29/5") {
  const auto modes = trapmodes::mode_eigensystem(cfg(3));
  CHECK(modes.mu(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(modes.mu(1) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(modes.mu(2) == doctest::Approx(29.0 / 5.0).epsilon(1e-9));
}

TEST_CASE("mode invariants up to N=20") {
  for (int n = 1; n <= 20; ++n) {
    const auto modes = trapmodes::mode_eigensystem(cfg(n));
    CHECK(std::abs(modes.mu(0) - 1.0) <= 1e-10);
    if (n >= 2) CHECK(std::abs(modes.mu(1) - 3.0) <= 1e-10);
    for (int p = 1; p < n; ++p) CHECK(modes.mu(p) > modes.mu(p - 1));

    const Eigen::MatrixXd gram = modes.b * modes.b.transpose();
    CHECK((gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-10);

    const double com = 1.0 / std::sqrt(static_cast<double>(n));
    for (int s = 0; s < n; ++s) CHECK(std::abs(modes.b(0, s) - com) <= 1e-10);

    // sign convention: first nonzero component positive
    for (int p = 0; p < n; ++p) {
      for (int s = 0; s < n; ++s) {
        if (std::abs(modes.b(p, s)) > 1e-12) {
          CHECK(modes.b(p, s) > 0.0);
          break;
        }
      }
    }
  }
}

TEST_CASE("largest supported chain still converges") {
  const auto u = trapmodes::equilibrium_positions(50);
  REQUIRE(u.size() == 50);
  for (size_t s = 1; s < u.size(); ++s) CHECK(u[s] > u[s - 1]);
  const auto modes = trapmodes::mode_eigensystem({50, constants::two_pi * 1e6, constants::ca40_mass});
  CHECK(std::abs(modes.mu(0) - 1.0) <= 1e-9);
  CHECK(std::abs(modes.mu(1) - 3.0) <= 1e-9);
}

TEST_CASE("trap config validation") {
  CHECK_THROWS_AS(trapmodes::mode_eigensystem({0, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(trapmodes::mode_eigensystem({2, -1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(trapmodes::mode_eigensystem({2, 1.0, 0.0}), std::invalid_argument);
}
