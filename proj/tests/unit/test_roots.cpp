#include <doctest.h>

#include "helpers.hpp"

#include <qalg/errors.hpp>
#include <qalg/pochhammer.hpp>
#include <qalg/roots.hpp>
#include <qalg/unipoly.hpp>

#include <cmath>

using namespace qalg;
using namespace qalg::test;

namespace {

std::vector<cdouble> from_roots(const std::vector<cdouble>& roots) {
  std::vector<cdouble> c{1.0};
  for (cdouble r : roots) {
    std::vector<cdouble> next(c.size() + 1, 0.0);
    for (size_t i = 0; i < c.size(); ++i) {
      next[i] -= r * c[i];
      next[i + 1] += c[i];
    }
    c = next;
  }
  return c;
}

}  // namespace

TEST_CASE("finite and infinite q-Pochhammer symbols") {
  cdouble a(0.3, 0.1), q(0.5, 0.2);
  cdouble direct = (1.0 - a) * (1.0 - a * q) * (1.0 - a * q * q);
  CHECK(std::abs(pochhammer(a, q, 3) - direct) < 1e-15);
  CHECK(std::abs(pochhammer(a, q, 0) - cdouble(1.0)) < 1e-15);
  // Euler function at 1/2.
  CHECK(std::abs(pochhammer(0.5, 0.5, std::nullopt) - cdouble(0.28878809508660242)) < 1e-14);
  CHECK_THROWS_AS(pochhammer(0.5, 2.0, std::nullopt), Error);
  CHECK(std::abs(pochhammer(0.5, 2.0, 2) - cdouble(0.0)) < 1e-15);
}

TEST_CASE("roots with multiplicities") {
  // (z - 1)^2 (z + 2)
  RootSet rs = complex_roots(std::vector<cdouble>{2.0, -3.0, 0.0, 1.0});
  REQUIRE(rs.roots.size() == 2);
  CHECK(std::abs(rs.roots[0] - cdouble(1.0)) < 1e-6);
  CHECK(rs.multiplicities[0] == 2);
  CHECK(std::abs(rs.roots[1] - cdouble(-2.0)) < 1e-10);
  CHECK(rs.multiplicities[1] == 1);
  CHECK(rs.total() == 3);
  CHECK(rs.residual < 1e-10);
}

TEST_CASE("zero roots are split off exactly") {
  RootSet rs = complex_roots(std::vector<cdouble>{0.0, 0.0, -3.0, 1.0});
  REQUIRE(rs.roots.size() == 2);
  CHECK(rs.roots[0] == cdouble(0.0));
  CHECK(rs.multiplicities[0] == 2);
  CHECK(std::abs(rs.roots[1] - cdouble(3.0)) < 1e-12);
  RootSet nz = nonzero_roots(std::vector<cdouble>{0.0, 0.0, -3.0, 1.0});
  REQUIRE(nz.roots.size() == 1);
  CHECK(std::abs(nz.roots[0] - cdouble(3.0)) < 1e-12);
}

TEST_CASE("roots are ordered by modulus then argument") {
  std::vector<cdouble> want{cdouble(0, 1), cdouble(0, -1), cdouble(-3, 0), cdouble(0.5, 0.5), cdouble(10, 0)};
  RootSet rs = complex_roots(from_roots(want));
  REQUIRE(rs.roots.size() == 5);
  CHECK(std::abs(rs.roots[0] - cdouble(0.5, 0.5)) < 1e-10);
  CHECK(std::abs(rs.roots[1] - cdouble(0, -1)) < 1e-10);
  CHECK(std::abs(rs.roots[2] - cdouble(0, 1)) < 1e-10);
  CHECK(std::abs(rs.roots[3] - cdouble(-3, 0)) < 1e-10);
  CHECK(std::abs(rs.roots[4] - cdouble(10, 0)) < 1e-9);
}

TEST_CASE("degree twelve with spread-out roots") {
  std::vector<cdouble> want;
  for (int k = 1; k <= 12; ++k) want.push_back(cdouble(k * 0.25, (k % 3) - 1.0));
  RootSet rs = complex_roots(from_roots(want));
  CHECK(rs.total() == 12);
  for (cdouble w : want) {
    double best = 1e9;
    for (cdouble r : rs.roots) best = std::min(best, std::abs(r - w));
    CHECK(best < 1e-7);
  }
}

TEST_CASE("degree zero has no roots to find") {
  CHECK_THROWS_AS(complex_roots(std::vector<cdouble>{3.0}), Error);
}

TEST_CASE("smallest root of a crest polynomial") {
  // 1 - 40 z - 36 z^2: positive root (sqrt(109) - 10) / 18.
  SmallestRoot s = smallest_modulus_root(std::vector<cdouble>{1.0, -40.0, -36.0});
  CHECK(std::abs(s.root - cdouble((std::sqrt(109.0) - 10.0) / 18.0)) < 1e-13);
  CHECK(s.unique_at_modulus);
  CHECK(s.multiplicity == 1);
  SmallestRoot tie = smallest_modulus_root(std::vector<cdouble>{1.0, 0.0, -2.0});
  CHECK_FALSE(tie.unique_at_modulus);
  CHECK(std::abs(std::abs(tie.root) - std::sqrt(0.5)) < 1e-13);
  SmallestRoot inf = smallest_modulus_root(std::vector<cdouble>{4.0});
  CHECK(inf.at_infinity);
}

TEST_CASE("roots of a polynomial with exact coefficients") {
  UniPoly p(Ring::exact());
  p.add(R(0), ex(-2));
  p.add(R(2), ex(1));
  RootSet rs = complex_roots(p.numeric_dense(2.0));
  REQUIRE(rs.roots.size() == 2);
  CHECK(std::abs(std::abs(rs.roots[0]) - std::sqrt(2.0)) < 1e-13);
}

TEST_CASE("depth roots") {
  Depth d = depth_root({1, 1});
  REQUIRE(d.kind == Depth::Kind::Finite);
  CHECK(d.value == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-10));
  CHECK(depth_root({0, 3}).kind == Depth::Kind::Zero);
  CHECK(depth_root({2}).kind == Depth::Kind::Infinite);
  // e^{-s} + e^{-2s} = 1 gives e^{-s} = (sqrt 5 - 1) / 2.
  Depth g = depth_root({1, 2});
  CHECK(g.value == doctest::Approx(-1.0 / std::log((std::sqrt(5.0) - 1.0) / 2.0)).epsilon(1e-10));
  CHECK_THROWS_AS(depth_root({-1, 2}), Error);
}
