#include <stdexcept>
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "ionraman/reference.hpp"
#include "ionraman/specfun.hpp"

using namespace ionraman;
using specfun::Xi;
using Complex = std::complex<double>;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

// independent series oracle: L^a_n(x) = sum_k (-1)^k C(n+a, n-k) x^k / k!
double laguerre_series(int a, int n, double x) {
  auto binom = [](int top, int bottom) {
    double r = 1.0;
    for (int i = 1; i <= bottom; ++i) r *= static_cast<double>(top - bottom + i) / i;
    return r;
  };
  double sum = 0.0, power = 1.0, kfact = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      power *= x;
      kfact *= k;
    }
    sum += (k % 2 == 0 ? 1.0 : -1.0) * binom(n + a, n - k) * power / kfact;
  }
  return sum;
}

// every (j, m) pair with 2j <= max_twice
std::vector<std::pair<HalfInt, HalfInt>> jm_pairs(int max_twice) {
  std::vector<std::pair<HalfInt, HalfInt>> out;
  for (int tj = 0; tj <= max_twice; ++tj)
    for (int tm = -tj; tm <= tj; tm += 2) out.push_back({h(tj), h(tm)});
  return out;
}

}  // namespace

TEST_CASE("wigner3j known values") {
  CHECK(specfun::wigner3j(h(2), h(2), h(0), h(2), h(-2), h(0)) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(specfun::wigner3j(h(1), h(2), h(1), h(-1), h(0), h(1)) ==
        doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-14));
  // m-sum selection rule
  CHECK(specfun::wigner3j(h(2), h(2), h(2), h(2), h(2), h(2)) == 0.0);
  // triangle violations
  CHECK(specfun::wigner3j(h(2), h(2), h(6), h(0), h(0), h(0)) == 0.0);
  CHECK(specfun::wigner3j(h(1), h(1), h(4), h(1), h(-1), h(0)) == 0.0);
}

TEST_CASE("wigner3j rejects malformed half-integers") {
  CHECK_THROWS_AS(specfun::wigner3j(h(2), h(2), h(0), h(1), h(-1), h(0)), std::invalid_argument);
  CHECK_THROWS_AS(specfun::wigner3j(h(2), h(2), h(0), h(4), h(-4), h(0)), std::invalid_argument);
  CHECK_THROWS_AS(specfun::wigner3j(h(-2), h(2), h(0), h(0), h(0), h(0)), std::invalid_argument);
}

TEST_CASE("wigner3j permutation and reflection symmetries") {
  const auto pairs = jm_pairs(6);
  int checked = 0;
  for (const auto& [j1, m1] : pairs)
    for (const auto& [j2, m2] : pairs)
      for (const auto& [j3, m3] : pairs) {
        if (m1.twice + m2.twice + m3.twice != 0) continue;
        if ((j1.twice + j2.twice + j3.twice) % 2 != 0) continue;
        const double base = specfun::wigner3j(j1, j2, j3, m1, m2, m3);
        const double cyclic = specfun::wigner3j(j2, j3, j1, m2, m3, m1);
        const double swapped = specfun::wigner3j(j2, j1, j3, m2, m1, m3);
        const double reflected = specfun::wigner3j(j1, j2, j3, -m1, -m2, -m3);
        const double sign =
            ((j1.twice + j2.twice + j3.twice) / 2) % 2 == 0 ? 1.0 : -1.0;
        CHECK(base == doctest::Approx(cyclic).epsilon(1e-13));
        CHECK(swapped == doctest::Approx(sign * base).epsilon(1e-13));
        CHECK(reflected == doctest::Approx(sign * base).epsilon(1e-13));
        ++checked;
      }
  CHECK(checked > 500);
}

TEST_CASE("wigner3j orthogonality") {
  for (int tj1 = 0; tj1 <= 4; ++tj1)
    for (int tj2 = 0; tj2 <= 4; ++tj2)
      for (int tj3 = std::abs(tj1 - tj2); tj3 <= tj1 + tj2; tj3 += 2)
        for (int tj3p = std::abs(tj1 - tj2); tj3p <= tj1 + tj2; tj3p += 2)
          for (int tm3 = -tj3; tm3 <= tj3; tm3 += 2)
            for (int tm3p = -tj3p; tm3p <= tj3p; tm3p += 2) {
              double sum = 0.0;
              for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
                const int tm2 = -tm1 - tm3;
                if (std::abs(tm2) > tj2) continue;
                sum += (tj3 + 1.0) *
                       specfun::wigner3j(h(tj1), h(tj2), h(tj3), h(tm1), h(tm2), h(tm3)) *
                       specfun::wigner3j(h(tj1), h(tj2), h(tj3p), h(tm1), h(tm2), h(tm3p));
              }
              const double expected = (tj3 == tj3p && tm3 == tm3p) ? 1.0 : 0.0;
              CHECK(sum == doctest::Approx(expected).epsilon(1e-12));
            }
}

TEST_CASE("laguerre closed forms and series oracle") {
  CHECK(specfun::laguerre(0, 0, 1.7) == 1.0);
  CHECK(specfun::laguerre(7, 0, -3.0) == 1.0);
  CHECK(specfun::laguerre(0, 1, 2.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(specfun::laguerre(1, 2, 0.5) == doctest::Approx(1.625).epsilon(1e-15));
  CHECK(specfun::laguerre(1, 2, 0.5) ==
        doctest::Approx(laguerre_series(1, 2, 0.5)).epsilon(1e-14));

  for (int a = 0; a <= 4; ++a)
    for (int n = 0; n <= 8; ++n)
      for (double x : {0.0, 0.04, 0.3, 1.0, 2.5}) {
        CHECK(specfun::laguerre(a, n, x) ==
              doctest::Approx(laguerre_series(a, n, x)).epsilon(1e-12));
        CHECK(specfun::laguerre(a, n, x) ==
              doctest::Approx(std::assoc_laguerre(n, a, x)).epsilon(1e-12));
      }
  CHECK_THROWS_AS(specfun::laguerre(-1, 2, 0.5), std::invalid_argument);
}

TEST_CASE("displacement element closed form") {
  CHECK(specfun::displacement_element(0, 0, Xi{0.0}) == Complex(1.0, 0.0));
  CHECK(std::abs(specfun::displacement_element(0, 0, Xi{0.3})) ==
        doctest::Approx(std::exp(-0.045)).epsilon(1e-14));
  CHECK(std::abs(specfun::displacement_element(0, 1, Xi{0.1})) ==
        doctest::Approx(0.1 * std::exp(-0.005)).epsilon(1e-14));
  // phase convention fixed by the brute-force operator: <0|D|1> = i xi e^{-xi^2/2}
  const Complex v = specfun::displacement_element(0, 1, Xi{0.1});
  CHECK(v.real() == doctest::Approx(0.0));
  CHECK(v.imag() == doctest::Approx(0.1 * std::exp(-0.005)).epsilon(1e-14));
  CHECK(specfun::displacement_element(3, 3, Xi{0.0}) == Complex(1.0, 0.0));
  CHECK(specfun::displacement_element(2, 5, Xi{0.0}) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(specfun::displacement_element(-1, 0, Xi{0.1}), std::invalid_argument);
}

TEST_CASE("displacement element vs brute-force operator exponential") {
  const auto check = reference::check_displacement_closed_form(6, 0.5, 5, 40);
  CHECK(check.max_element_error <= 1e-9);
  CHECK(check.max_unitarity_defect <= 1e-9);
}

TEST_CASE("displacement conjugate-transpose symmetry") {
  for (double xi : {-0.4, -0.1, 0.2, 0.5})
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; n <= 6; ++n) {
        const Complex left = specfun::displacement_element(m, n, Xi{xi});
        const Complex right = std::conj(specfun::displacement_element(n, m, Xi{-xi}));
        CHECK(std::abs(left - right) <= 1e-14);
      }
}

TEST_CASE("displacement row unitarity") {
  for (double xi : {-0.5, -0.25, 0.1, 0.5})
    for (int m = 0; m <= 5; ++m) {
      double row = 0.0;
      for (int n = 0; n <= 60; ++n)
        row += std::norm(specfun::displacement_element(m, n, Xi{xi}));
      CHECK(row == doctest::Approx(1.0).epsilon(1e-9));
    }
}
