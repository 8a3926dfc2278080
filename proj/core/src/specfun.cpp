#include "ionraman/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace ionraman::specfun {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int factorial(int n) {
  cpp_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_pair(HalfInt j, HalfInt m) {
  if (j.twice < 0) throw std::invalid_argument("wigner3j: j must be non-negative");
  if (((j.twice - m.twice) % 2 + 2) % 2 != 0)
    throw std::invalid_argument("wigner3j: 2m and 2j parity mismatch");
  if (std::abs(m.twice) > j.twice)
    throw std::invalid_argument("wigner3j: |m| exceeds j");
}

}  // namespace

double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  check_pair(j1, m1);
  check_pair(j2, m2);
  check_pair(j3, m3);

  if (m1.twice + m2.twice + m3.twice != 0) return 0.0;
  // Triangle rule; the parity test rejects triples like (1/2, 1/2, 1/2) that
  // cannot couple to an integer total.
  if ((j1.twice + j2.twice + j3.twice) % 2 != 0) return 0.0;
  if (j3.twice < std::abs(j1.twice - j2.twice) || j3.twice > j1.twice + j2.twice) return 0.0;

  const int a = (j1.twice + j2.twice - j3.twice) / 2;
  const int b = (j1.twice - j2.twice + j3.twice) / 2;
  const int c = (-j1.twice + j2.twice + j3.twice) / 2;
  const int j1m_plus = (j1.twice + m1.twice) / 2, j1m_minus = (j1.twice - m1.twice) / 2;
  const int j2m_plus = (j2.twice + m2.twice) / 2, j2m_minus = (j2.twice - m2.twice) / 2;
  const int j3m_plus = (j3.twice + m3.twice) / 2, j3m_minus = (j3.twice - m3.twice) / 2;

  // Racah sum; k bounds keep every factorial argument non-negative.
  const int kmin = std::max({0, (j2.twice - j3.twice - m1.twice) / 2,
                             (j1.twice - j3.twice + m2.twice) / 2});
  const int kmax = std::min({a, j1m_minus, j2m_plus});
  if (kmin > kmax) return 0.0;

  cpp_rational sum = 0;
  for (int k = kmin; k <= kmax; ++k) {
    cpp_int denom = factorial(k) * factorial(a - k) * factorial(j1m_minus - k) *
                    factorial(j2m_plus - k) *
                    factorial((j3.twice - j2.twice + m1.twice) / 2 + k) *
                    factorial((j3.twice - j1.twice - m2.twice) / 2 + k);
    cpp_rational term(1, denom);
    sum += (k % 2 == 0) ? term : -term;
  }

  cpp_rational norm(factorial(a) * factorial(b) * factorial(c),
                    factorial((j1.twice + j2.twice + j3.twice) / 2 + 1));
  norm *= factorial(j1m_plus);
  norm *= factorial(j1m_minus);
  norm *= factorial(j2m_plus);
  norm *= factorial(j2m_minus);
  norm *= factorial(j3m_plus);
  norm *= factorial(j3m_minus);

  // value = (-1)^(j1-j2-m3) sqrt(norm) * sum, kept rational until the end
  const cpp_rational mag2 = norm * sum * sum;
  double value = std::sqrt(mag2.convert_to<double>());
  if (sum < 0) value = -value;
  const int phase = (j1.twice - j2.twice - m3.twice) / 2;
  if (((phase % 2) + 2) % 2 == 1) value = -value;
  return value;
}

double laguerre(int a, int n, double x) {
  if (a < 0 || n < 0) throw std::invalid_argument("laguerre: order and degree must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * curr - (k + a) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

std::complex<double> displacement_element(int m, int n, Xi xi) {
  if (m < 0 || n < 0)
    throw std::invalid_argument("displacement_element: occupation numbers must be >= 0");
  if (!std::isfinite(xi.value))
    throw std::invalid_argument("displacement_element: xi must be finite");

  const int lo = std::min(m, n);
  const int hi = std::max(m, n);
  const int diff = hi - lo;
  const double x2 = xi.value * xi.value;

  double amp = std::exp(-0.5 * x2) * laguerre(diff, lo, x2) * std::pow(std::abs(xi.value), diff);
  for (int i = lo + 1; i <= hi; ++i) amp /= std::sqrt(static_cast<double>(i));

  // Phi_mn is always a quarter-turn multiple; evaluate it exactly.
  const int sgn = (xi.value > 0.0) - (xi.value < 0.0);
  const int quarter = ((2 * (n + lo) + sgn * (m - n)) % 4 + 4) % 4;
  static constexpr std::complex<double> turns[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return amp * turns[quarter];
}

}  // namespace ionraman::specfun
