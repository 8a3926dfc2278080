#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "ionraman/atomic.hpp"
#include "ionraman/budget.hpp"
#include "ionraman/constants.hpp"

using namespace ionraman;
namespace cn = constants;

TEST_CASE("ca level scheme manifolds") {
  const auto& scheme = atomic::ca_level_scheme();
  CHECK(scheme.species == "Ca+");
  CHECK(scheme.manifold("4S1/2").size() == 2);
  CHECK(scheme.manifold("4P1/2").size() == 2);
  CHECK(scheme.manifold("3D3/2").size() == 4);
  CHECK(scheme.manifold("3D5/2").size() == 6);
  CHECK(scheme.levels.size() == 14);

  const auto& shelving = scheme.transition("4S1/2", "3D5/2");
  CHECK(shelving.lifetime == doctest::Approx(1.1));
  CHECK(shelving.wavelength == doctest::Approx(729e-9));
  CHECK(&scheme.transition_near(397e-9) == &scheme.transition("4S1/2", "4P1/2"));
  CHECK_THROWS_AS(scheme.transition("4S1/2", "4P3/2"), std::invalid_argument);
  CHECK_THROWS_AS(scheme.transition_near(500e-9), std::invalid_argument);
}

TEST_CASE("transition invariants: A tau = 1 and k lambda = 2 pi") {
  for (const auto& t : atomic::ca_level_scheme().transitions) {
    CHECK(t.decay_rate * t.lifetime == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(t.wavenumber * t.wavelength == doctest::Approx(cn::two_pi).epsilon(1e-15));
  }
}

TEST_CASE("level energies anchored at the ground centroid") {
  const auto& scheme = atomic::ca_level_scheme();
  const double w397 = cn::two_pi * cn::light_speed / 397e-9;
  const double w866 = cn::two_pi * cn::light_speed / 866e-9;
  const double w729 = cn::two_pi * cn::light_speed / 729e-9;
  CHECK(scheme.manifold("4S1/2").front().energy == 0.0);
  CHECK(scheme.manifold("4P1/2").front().energy == doctest::Approx(w397).epsilon(1e-12));
  CHECK(scheme.manifold("3D3/2").front().energy == doctest::Approx(w397 - w866).epsilon(1e-12));
  CHECK(scheme.manifold("3D5/2").front().energy == doctest::Approx(w729).epsilon(1e-12));
  for (const auto& t : scheme.transitions)
    CHECK(scheme.manifold(t.lower).front().energy < scheme.manifold(t.upper).front().energy);
}

TEST_CASE("isotope table matches the bundled data") {
  const auto isotopes = atomic::isotope_table();
  REQUIRE(isotopes.size() == 6);

  auto find = [&](int a) -> const atomic::Isotope& {
    for (const auto& iso : isotopes)
      if (iso.mass_number == a) return iso;
    FAIL("missing isotope ", a);
    return isotopes.front();
  };

  CHECK(find(41).decay_mode == "EC");
  CHECK(find(41).half_life.value() == doctest::Approx(103000 * 3.15576e7).epsilon(1e-6));
  CHECK(find(41).nuclear_spin == HalfInt::from_twice(7));

  CHECK(find(43).decay_mode == "stable");
  CHECK(!find(43).half_life.has_value());
  CHECK(find(43).nuclear_spin == HalfInt::from_twice(7));

  CHECK(find(45).nuclear_spin == HalfInt::from_twice(7));
  CHECK(find(47).nuclear_spin == HalfInt::from_twice(7));
  CHECK(find(49).nuclear_spin == HalfInt::from_twice(3));

  CHECK(find(51).decay_mode == "beta-");
  CHECK(find(51).half_life.value() == doctest::Approx(10.0));
  CHECK(find(51).nuclear_spin == HalfInt::from_twice(3));

  for (const auto& iso : isotopes)
    CHECK(iso.mass / cn::atomic_mass_unit == doctest::Approx(iso.mass_number).epsilon(0.002));
}

TEST_CASE("data file round-trips unchanged") {
  const auto& scheme = atomic::ca_level_scheme();
  const std::string text = atomic::serialize_level_scheme(scheme);
  const auto reparsed = atomic::parse_level_scheme(text);

  REQUIRE(reparsed.levels.size() == scheme.levels.size());
  for (size_t i = 0; i < scheme.levels.size(); ++i) {
    CHECK(reparsed.levels[i].term == scheme.levels[i].term);
    CHECK(reparsed.levels[i].j == scheme.levels[i].j);
    CHECK(reparsed.levels[i].mj == scheme.levels[i].mj);
    CHECK(reparsed.levels[i].energy == scheme.levels[i].energy);
  }
  REQUIRE(reparsed.transitions.size() == scheme.transitions.size());
  for (size_t i = 0; i < scheme.transitions.size(); ++i) {
    CHECK(reparsed.transitions[i].wavelength == scheme.transitions[i].wavelength);
    CHECK(reparsed.transitions[i].lifetime == scheme.transitions[i].lifetime);
  }
  REQUIRE(reparsed.isotopes.size() == scheme.isotopes.size());
  for (size_t i = 0; i < scheme.isotopes.size(); ++i) {
    CHECK(reparsed.isotopes[i].mass_number == scheme.isotopes[i].mass_number);
    CHECK(reparsed.isotopes[i].decay_mode == scheme.isotopes[i].decay_mode);
    CHECK(reparsed.isotopes[i].half_life == scheme.isotopes[i].half_life);
    CHECK(reparsed.isotopes[i].nuclear_spin == scheme.isotopes[i].nuclear_spin);
    CHECK(reparsed.isotopes[i].mass == scheme.isotopes[i].mass);
  }
  // serialization is a fixed point
  CHECK(atomic::serialize_level_scheme(reparsed) == text);
}

TEST_CASE("malformed data is rejected") {
  CHECK_THROWS_AS(atomic::parse_level_scheme("not json"), std::invalid_argument);
  CHECK_THROWS_AS(
      atomic::parse_level_scheme(
          R"({"species":"X","levels":[{"term":"A","J":"1/2"},{"term":"B","J":"1/2"}],
    "transitions":[],"isotopes":[]})"),
      std::invalid_argument);  // manifold B is not connected to any transition
  CHECK_THROWS_AS(atomic::load_level_scheme("/nonexistent/path.json"), std::invalid_argument);
}

TEST_CASE("lande factors and zeeman shifts") {
  const auto& scheme = atomic::ca_level_scheme();
  const auto s_up = scheme.level("4S1/2", HalfInt::from_twice(1));
  const auto p_up = scheme.level("4P1/2", HalfInt::from_twice(1));
  const auto d52 = scheme.level("3D5/2", HalfInt::from_twice(5));
  CHECK(atomic::lande_g(s_up) == doctest::Approx(2.0));
  CHECK(atomic::lande_g(p_up) == doctest::Approx(2.0 / 3.0));
  CHECK(atomic::lande_g(d52) == doctest::Approx(6.0 / 5.0));

  // g = 2, mJ = 1/2: shift equals mu_B B / hbar, i.e. the splitting formula
  const double b = 1.0 * cn::gauss_to_tesla;
  CHECK(atomic::zeeman_shift(s_up, b) == doctest::Approx(budget::zeeman_splitting(1.0)));
  CHECK(atomic::zeeman_shifted(s_up, b).energy ==
        doctest::Approx(s_up.energy + atomic::zeeman_shift(s_up, b)));
  CHECK(atomic::zeeman_shift(s_up, 0.0) == 0.0);
}
