#include <stdexcept>
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "ionraman/atomic.hpp"
#include "ionraman/budget.hpp"
#include "ionraman/constants.hpp"

using namespace ionraman;
namespace cn = constants;
using budget::PowerMode;
using budget::PowerScenario;

namespace {

PowerScenario shelving_pi() {
  PowerScenario sc;
  sc.mode = PowerMode::single_laser_v;
  sc.rabi = cn::two_pi * 1.0e6;
  sc.wavelength = 729e-9;
  sc.lifetime = 1.1;
  sc.diameter = 100e-6;
  return sc;
}

PowerScenario cooling_u() {
  PowerScenario sc;
  sc.mode = PowerMode::raman_u;
  sc.rabi = cn::two_pi * 1.0e6;
  sc.detuning = cn::two_pi * 1.0e10;
  sc.wavelength = 397e-9;
  sc.lifetime = 7.1e-9;
  sc.diameter = 100e-6;
  sc.eta = 0.1;
  sc.n_ions = 10;
  return sc;
}

}  // namespace

TEST_CASE("required power, four cases") {
  SUBCASE("shelving pulse lands near 0.2 W") {
    // literal re-evaluation of Omega^2 h c d^2 tau / lambda^3
    const double direct = std::pow(cn::two_pi * 1.0e6, 2) * cn::planck * cn::light_speed *
                          1e-8 * 1.1 / std::pow(729e-9, 3);
    const double p = budget::required_power(shelving_pi());
    CHECK(p == doctest::Approx(direct).epsilon(1e-12));
    CHECK(p == doctest::Approx(0.2).epsilon(0.3));
  }

  SUBCASE("pump-out saturation lands near 0.1 uW") {
    PowerScenario sc;
    sc.mode = PowerMode::saturation;
    sc.wavelength = 866e-9;
    sc.lifetime = 9.4e-8;
    sc.diameter = 100e-6;
    const double direct =
        4.0 * cn::planck * cn::light_speed * 1e-8 / (9.4e-8 * std::pow(866e-9, 3));
    const double p = budget::required_power(sc);
    CHECK(p == doctest::Approx(direct).epsilon(1e-12));
    CHECK(p / 0.1e-6 > 0.1);
    CHECK(p / 0.1e-6 < 10.0);
  }

  SUBCASE("sideband-cooling raman pulse lands within a decade of 0.5 mW") {
    const double p = budget::required_power(cooling_u());
    CHECK(p / 0.5e-3 > 0.1);
    CHECK(p / 0.5e-3 < 10.0);
  }

  SUBCASE("raman U / raman V ratio is sqrt(N)/eta exactly") {
    auto u = cooling_u();
    auto v = u;
    v.mode = PowerMode::raman_v;
    CHECK(budget::required_power(u) / budget::required_power(v) ==
          doctest::Approx(std::sqrt(10.0) / 0.1).epsilon(1e-12));
  }

  SUBCASE("missing mode-specific fields are rejected") {
    auto sc = cooling_u();
    sc.eta = 0.0;
    CHECK_THROWS_AS(budget::required_power(sc), std::invalid_argument);
    sc = cooling_u();
    sc.detuning = 0.0;
    CHECK_THROWS_AS(budget::required_power(sc), std::invalid_argument);
    sc = shelving_pi();
    sc.rabi = 0.0;
    CHECK_THROWS_AS(budget::required_power(sc), std::invalid_argument);
    sc = shelving_pi();
    sc.diameter = 0.0;
    CHECK_THROWS_AS(budget::required_power(sc), std::invalid_argument);
  }
}

TEST_CASE("required power monotonicity") {
  const auto base_u = cooling_u();
  const double p0 = budget::required_power(base_u);

  auto bump = [&](auto setter) {
    auto sc = base_u;
    setter(sc);
    return budget::required_power(sc);
  };

  CHECK(bump([](PowerScenario& s) { s.rabi *= 1.5; }) > p0);
  CHECK(bump([](PowerScenario& s) { s.detuning *= 1.5; }) > p0);
  CHECK(bump([](PowerScenario& s) { s.diameter *= 1.5; }) > p0);
  CHECK(bump([](PowerScenario& s) { s.n_ions = 20; }) > p0);
  CHECK(bump([](PowerScenario& s) { s.eta = 0.2; }) < p0);
  CHECK(bump([](PowerScenario& s) { s.wavelength *= 1.5; }) < p0);

  auto sat = shelving_pi();
  sat.mode = PowerMode::saturation;
  const double s0 = budget::required_power(sat);
  auto sat2 = sat;
  sat2.lifetime *= 2.0;
  CHECK(budget::required_power(sat2) < s0);  // saturation eases with a slower line
  auto sat3 = sat;
  sat3.diameter *= 2.0;
  CHECK(budget::required_power(sat3) == doctest::Approx(4.0 * s0).epsilon(1e-12));
}

TEST_CASE("sideband cooling bound") {
  const double bound_10 = budget::sideband_bound(10, 1.0, 397e-9);
  CHECK(bound_10 == doctest::Approx(cn::two_pi * 3.16e3).epsilon(0.01));
  const double bound_1 = budget::sideband_bound(1, 1.0, 397e-9);
  CHECK(bound_1 == doctest::Approx(cn::two_pi * 31.6e3).epsilon(0.01));
  CHECK(bound_1 == doctest::Approx(10.0 * bound_10).epsilon(1e-12));
  CHECK(budget::sideband_bound(10, 0.0, 397e-9) == 0.0);
  // recoil scaling with wavelength
  CHECK(budget::sideband_bound(1, 1.0, 794e-9) == doctest::Approx(bound_1 / 4.0).epsilon(1e-12));
  CHECK(budget::sideband_bound(1, 2.5, 397e-9) == doctest::Approx(2.5 * bound_1).epsilon(1e-12));
  CHECK_THROWS_AS(budget::sideband_bound(0, 1.0, 397e-9), std::invalid_argument);
  CHECK_THROWS_AS(budget::sideband_bound(1, -0.5, 397e-9), std::invalid_argument);
}

TEST_CASE("zeeman splitting") {
  CHECK(budget::zeeman_splitting(1.0) == doctest::Approx(cn::two_pi * 1.4e6).epsilon(0.01));
  CHECK(budget::zeeman_splitting(0.0) == 0.0);
  CHECK(budget::zeeman_splitting(2.0) ==
        doctest::Approx(2.0 * budget::zeeman_splitting(1.0)).epsilon(1e-12));
  CHECK_THROWS_AS(budget::zeeman_splitting(-1.0), std::invalid_argument);
}

TEST_CASE("budget table") {
  const auto& scheme = atomic::ca_level_scheme();
  const budget::BudgetConfig cfg;
  const auto rows = budget::budget_table(scheme, cfg);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].wavelength == doctest::Approx(397e-9));
  CHECK(rows[1].wavelength == doctest::Approx(866e-9));
  CHECK(rows[2].wavelength == doctest::Approx(729e-9));
  for (const auto& row : rows) CHECK(row.power > 0.0);

  SUBCASE("the workhorse row is set by sideband cooling") {
    auto cool = cooling_u();
    cool.lifetime = scheme.transition("4S1/2", "4P1/2").lifetime;
    CHECK(rows[0].power == doctest::Approx(budget::required_power(cool)).epsilon(1e-12));
  }

  SUBCASE("row maximum is order-independent") {
    auto scenarios = budget::workhorse_scenarios(scheme, cfg);
    double forward = 0.0;
    for (const auto& sc : scenarios) forward = std::max(forward, budget::required_power(sc));
    std::reverse(scenarios.begin(), scenarios.end());
    double backward = 0.0;
    for (const auto& sc : scenarios) backward = std::max(backward, budget::required_power(sc));
    CHECK(forward == backward);
    CHECK(rows[0].power == doctest::Approx(forward).epsilon(1e-12));
  }

  SUBCASE("doubling the spot sizes quadruples every row") {
    auto wide = cfg;
    wide.d_logic *= 2.0;
    wide.d_broad *= 2.0;
    const auto rows2 = budget::budget_table(scheme, wide);
    for (size_t i = 0; i < rows.size(); ++i)
      CHECK(rows2[i].power == doctest::Approx(4.0 * rows[i].power).epsilon(1e-12));
  }

  SUBCASE("bandwidth column carries the reference values") {
    CHECK(rows[0].bandwidth == doctest::Approx(cn::two_pi * 20e6));
    CHECK(rows[1].bandwidth == doctest::Approx(cn::two_pi * 2e6));
    CHECK(rows[2].bandwidth == doctest::Approx(cn::two_pi * 100e3));
  }
}
