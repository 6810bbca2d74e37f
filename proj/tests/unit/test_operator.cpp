#include <doctest.h>

#include "helpers.hpp"

#include <qalg/errors.hpp>

using namespace qalg;
using namespace qalg::test;

TEST_CASE("q-factors sort their indices") {
  QFactor f = F(2, {3, 0, 1});
  CHECK(f.alphas == std::vector<int>{0, 1, 3});
  CHECK(f.ell() == 3);
  CHECK(f.alpha_sum() == 4);
  CHECK(f.to_string() == "(2;0,1,3)");
  CHECK(F(1, {}).to_string() == "(1;∅)");
  CHECK(F(0, {}).is_constant());
  CHECK(F(0, {0, 1}) < F(1, {0}));
}

TEST_CASE("operators drop cancelled terms") {
  QOperator p = make_operator(Ring::exact(), {{F(0, {0}), ex(1)}, {F(1, {0, 1}), ex(-1)}});
  CHECK(p.size() == 2);
  p.add(F(0, {0}), ex(-1));
  CHECK(p.size() == 1);
  CHECK(p.coefficient(F(0, {0})).is_zero());
  CHECK(p.length() == 2);
  CHECK(*p.max_alpha() == 1);
  CHECK(*p.min_alpha() == 0);
  CHECK(*p.max_a() == 1);
}

TEST_CASE("q-Catalan decomposes into its parts") {
  QOperator p = eq("f(z) = 1 + z*f(z)*f(q*z)");
  Decomposition d = decompose(p);
  CHECK(d.nonshifting == make_operator(Ring::exact(), {{F(0, {0}), ex(1)}}));
  CHECK(d.shifting == make_operator(Ring::exact(), {{F(1, {0, 1}), ex(-1)}}));
  CHECK(d.constant == make_operator(Ring::exact(), {{F(0, {}), ex(-1)}}));
  AlphaStats s = alpha_stats(p);
  CHECK(*s.nonshifting_max == 0);
  CHECK(*s.nonshifting_min == 0);
  CHECK(*s.shifting_max == 1);
  CHECK(*s.shifting_min == 0);
  CHECK(*s.max_a == 1);
  CHECK_THROWS_AS(alpha_stats(QOperator()), Error);
  CHECK_THROWS_AS(decompose(eq("f(z) = z^(1/2)")), Error);
}

TEST_CASE("products multiply factors") {
  QOperator y0 = make_operator(Ring::exact(), {{F(0, {0}), ex(1)}});
  QOperator zy1 = make_operator(Ring::exact(), {{F(1, {1}), qmono(2, R(1))}});
  QOperator prod = y0 * zy1;
  CHECK(prod == make_operator(Ring::exact(), {{F(1, {0, 1}), qmono(2, R(1))}}));
  QOperator sum = y0 + zy1;
  CHECK((sum - zy1) == y0);
  CHECK((-y0).coefficient(F(0, {0})) == ex(-1));
  CHECK(y0.scaled(ex(3)).coefficient(F(0, {0})) == ex(3));
}

TEST_CASE("numeric operators prune relative to their scale") {
  Ring ring = Ring::numeric(2.0);
  QOperator p(ring);
  p.add(F(0, {0}), Coeff(cdouble(1e6)));
  p.add(F(1, {0}), Coeff(cdouble(1e-9)));
  p.prune();
  CHECK(p.size() == 1);
  CHECK(p.zero_threshold() == doctest::Approx(1e-12 * (1 + 1e6)));
}

TEST_CASE("conversion to numeric evaluates coefficients") {
  QOperator p = eq("f(z) = 1 + q^2*z*f(z)*f(q*z)");
  QOperator n = to_numeric(p, 3.0);
  CHECK_FALSE(n.ring().is_exact());
  CHECK(std::abs(n.coefficient(F(1, {0, 1})).numeric() - cdouble(-9.0)) < 1e-12);
  QOperator m = to_numeric(p, 3.0);
  m.add(F(1, {0, 1}), Coeff(cdouble(1e-14)));
  CHECK(approx_equal(n, m, 1e-12));
  CHECK_FALSE(approx_equal(n, to_numeric(p, 2.0), 1e-12));
  CHECK_THROWS_AS(n + p, Error);
}
