#include <doctest.h>

#include "helpers.hpp"

#include <qalg/asymptotics.hpp>
#include <qalg/pochhammer.hpp>
#include <qalg/series.hpp>
#include <qalg/transforms.hpp>

#include <cmath>
#include <complex>
#include <vector>

using namespace qalg;
using namespace qalg::test;

namespace {

using IntPoly = std::vector<long>;  // ascending powers of q

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void add_shifted(IntPoly& acc, const IntPoly& p, size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

// f_n = sum_k q^k f_k f_(n-1-k), the combinatorial recursion for q-Catalan numbers.
std::vector<IntPoly> catalan_oracle(int n_max) {
  std::vector<IntPoly> f{{1}};
  for (int n = 1; n <= n_max; ++n) {
    IntPoly acc{0};
    for (int k = 0; k < n; ++k) add_shifted(acc, mul(f[k], f[n - 1 - k]), static_cast<size_t>(k));
    while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
    f.push_back(acc);
  }
  return f;
}

using wide = std::complex<long double>;

// Colored Jones polynomial of the figure-eight knot by its finite sum.
wide jones_direct(int n, wide q) {
  if (n == 0) return 1.0L;
  wide total = 0.0L;
  for (int k = 0; k < n; ++k) {
    wide term = std::pow(q, static_cast<long double>(n * k));
    for (int i = 0; i < k; ++i) {
      term *= (1.0L - std::pow(q, static_cast<long double>(-(n + 1) - i))) *
              (1.0L - std::pow(q, static_cast<long double>(-(n - 1) + i)));
    }
    total += term;
  }
  return total;
}

long double euler_product(long double x) {
  long double p = 1.0L;
  for (int k = 1; k < 400; ++k) p *= 1.0L - std::pow(x, static_cast<long double>(k));
  return p;
}

}  // namespace

TEST_CASE("q-Catalan coefficients agree with the combinatorial recursion") {
  auto oracle = catalan_oracle(25);
  SeriesCoeffs f = solve_coefficients(fixture("qcatalan"), 25);
  for (int n = 0; n <= 25; ++n) {
    CAPTURE(n);
    CHECK(f.coeffs[n] == Coeff(qpoly(oracle[n])));
    CHECK(static_cast<long>(oracle[n].size()) - 1 == (n >= 1 ? n * (n - 1) / 2 : 0));
  }
}

TEST_CASE("figure-eight direct sum limits") {
  // |q| > 1: J_n q^(-n(n-1)) tends to the Euler function at 1/q.
  wide q = 2.0L;
  long double limit = euler_product(0.5L);
  CHECK(static_cast<double>(limit) == doctest::Approx(0.28878809508660242).epsilon(1e-15));
  long double at25 = std::abs(jones_direct(25, q) * std::pow(q, -25.0L * 24.0L));
  CHECK(std::abs(at25 - limit) < 1e-6);
  // |q| < 1: J_n q^(n(n-1)) tends to (q; q)_inf.
  wide small = 0.5L;
  long double at25s = std::abs(jones_direct(25, small) * std::pow(small, 25.0L * 24.0L));
  CHECK(std::abs(at25s - limit) < 1e-6);
  CHECK(std::abs(pochhammer(0.5, 0.5, std::nullopt) - std::complex<double>(static_cast<double>(limit))) < 1e-14);
}

TEST_CASE("figure-eight direct sum small cases") {
  // J_1 = 1, J_2 = q^2 - q + 1 - q^-1 + q^-2.
  for (long double x : {2.0L, 0.5L, 1.7L}) {
    wide q = x;
    CHECK(std::abs(jones_direct(1, q) - 1.0L) < 1e-15);
    wide j2 = q * q - q + 1.0L - 1.0L / q + 1.0L / (q * q);
    CHECK(std::abs(jones_direct(2, q) - j2) < 1e-12);
  }
}

TEST_CASE("figure-eight operator only admits constant power series") {
  // Every coefficient operator carries a factor (1 - sigma), so f_0 = 1 forces f_n = 0 for n >= 1
  // although the direct sum has J_1 = 1.
  SeriesCoeffs f = solve_coefficients(fixture("jones8"), 6, ex(1));
  CHECK(f.coeffs[0] == ex(1));
  for (long n = 1; n <= 6; ++n) CHECK(f.coeffs[n].is_zero());
}

TEST_CASE("Drake's first example matches its product constant") {
  long double q = 2.0L;
  long double c = 1.0L;
  for (int i = 1; i < 200; ++i)
    c *= (1.0L + std::pow(q, -2.0L * (2 * i - 1))) / (1.0L - std::pow(q, -2.0L * i));
  CHECK(static_cast<double>(c) == doctest::Approx(1.84573).epsilon(1e-5));
  SeriesCoeffs f = solve_coefficients(to_numeric(fixture("drake1"), 2.0), 40);
  long double normalized = std::abs(f.wide_at(40)) / std::pow(q, 1600.0L);
  CHECK(std::abs(normalized - c) < 1e-6 * c);
}

TEST_CASE("running example crest root by the quadratic formula") {
  // 1 - 40 z - 36 z^2 at q = 2.
  double disc = 40.0 * 40.0 + 4.0 * 36.0;
  double root = (-40.0 + std::sqrt(disc)) / 72.0;
  CrestReport c = crest(fixture("running8"), ex(2), std::complex<double>(2.0));
  REQUIRE(c.R);
  CHECK(std::abs(*c.R - root) < 1e-12);
  CHECK(std::abs(root - (std::sqrt(109.0) - 10.0) / 18.0) < 1e-15);
}

TEST_CASE("half-order example against its scalar recursion") {
  // g_n = [n = 0] + sum_(j < n) g_j.
  std::vector<long> g{1};
  for (int n = 1; n <= 20; ++n) {
    long s = 0;
    for (long v : g) s += v;
    g.push_back(s);
  }
  SeriesCoeffs f = solve_coefficients(fixture("gevrey_half"), 20);
  for (int n = 0; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(f.coeffs[n] == qmono(g[n], R(n * n, 2)));
  }
}

TEST_CASE("generic degree against brute force over compositions") {
  // For q-Catalan delta_n = max over k of delta_k + delta_(n-1-k) + k, seeded by delta_0 = 0.
  std::vector<long> brute{0};
  for (long n = 1; n <= 30; ++n) {
    long best = 0;
    for (long k = 0; k < n; ++k) best = std::max(best, brute[k] + brute[n - 1 - k] + k);
    brute.push_back(best);
  }
  CHECK(generic_degree(fixture("qcatalan"), 30) == brute);
  CHECK(generic_degree_compositional(fixture("qcatalan"), 30) == brute);
}
