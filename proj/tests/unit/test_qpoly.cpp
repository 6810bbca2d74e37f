#include <doctest.h>

#include "helpers.hpp"

#include <qalg/errors.hpp>

#include <cmath>

using namespace qalg;
using namespace qalg::test;

TEST_CASE("rational helpers") {
  CHECK(is_integer(R(4, 2)));
  CHECK_FALSE(is_integer(R(1, 2)));
  CHECK(to_long(R(-6, 3)) == -2);
  CHECK_THROWS_AS(to_long(R(1, 3)), Error);
  CHECK(floor_long(R(-1, 2)) == -1);
  CHECK(to_string(R(-3, 6)) == "-1/2");
  CHECK(rationalize(0.3333333333333, 1000) == R(1, 3));
  CHECK(rationalize(-2.75, 10) == R(-11, 4));
}

TEST_CASE("binomial expansion prints in ascending powers") {
  QPoly p = qpoly({1, 1}).pow(3);
  CHECK(p == qpoly({1, 3, 3, 1}));
  CHECK(p.to_string() == "1+3q+3q^2+q^3");
  CHECK(p.to_string(true) == "1+3*q+3*q^2+q^3");
  CHECK(p.min_exponent() == 0);
  CHECK(p.max_exponent() == 3);
  CHECK(p.coefficient(R(2)) == 3);
}

TEST_CASE("fractional exponents normalize their denominator") {
  QPoly half = QPoly::q_power(R(1, 2));
  CHECK(half.denominator() == 2);
  QPoly one = half * half;
  CHECK(one == QPoly::q_power(R(1)));
  CHECK(one.denominator() == 1);
  QPoly mixed = QPoly::q_power(R(1, 2)) + QPoly::q_power(R(1, 3));
  CHECK(mixed.denominator() == 6);
  CHECK(mixed.to_string() == "q^(1/3)+q^(1/2)");
  CHECK((mixed - QPoly::q_power(R(1, 3))) == half);
  CHECK((mixed - QPoly::q_power(R(1, 3))).denominator() == 2);
}

TEST_CASE("negative exponents and constants") {
  QPoly p = QPoly::monomial(R(-2), R(-1)) + QPoly(R(3, 2));
  CHECK(p.to_string() == "-2q^(-1)+3/2");
  CHECK(p.min_exponent() == -1);
  CHECK_FALSE(p.is_constant());
  CHECK(QPoly(R(5)).is_constant());
  CHECK(QPoly(R(5)).constant_value() == 5);
  CHECK(QPoly().is_zero());
  CHECK(QPoly().to_string() == "0");
}

TEST_CASE("shift, inversion and exponent scaling") {
  QPoly p = qpoly({1, 2});
  CHECK(p.shifted(R(2)) == qpoly({1, 2}, 2));
  CHECK(p.substitute_inverse_q() == qpoly({2, 1}, -1));
  CHECK(p.scale_exponents(R(1, 2)) == QPoly(R(1)) + QPoly::monomial(R(2), R(1, 2)));
}

TEST_CASE("exact division") {
  QPoly num = qpoly({1, 0, -1});
  QPoly den = qpoly({1, -1});
  CHECK(num.divided_by(den) == qpoly({1, 1}));
  CHECK(qpoly({0, 0, 6}).divided_by(qpoly({0, 3})) == qpoly({0, 2}));
  CHECK(qpoly({1}).divided_by(QPoly(R(4))) == QPoly(R(1, 4)));
  CHECK_THROWS_AS(qpoly({1, 1}).divided_by(qpoly({1, -1})), Error);
  CHECK_THROWS_AS(qpoly({1}).divided_by(QPoly()), Error);
  try {
    (void)qpoly({1, 1}).divided_by(qpoly({1, -1}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InexactDivision);
  }
}

TEST_CASE("evaluation uses the principal branch") {
  QPoly p = qpoly({1, 3, 3, 1});
  CHECK(std::abs(p.eval(2.0) - cdouble(27.0)) < 1e-12);
  CHECK(std::abs(QPoly::q_power(R(1, 2)).eval(2.0) - cdouble(std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(QPoly::q_power(R(1, 2)).eval(-1.0) - cdouble(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(QPoly::q_power(R(-2)).eval(cdouble(0.0, 2.0)) - cdouble(-0.25)) < 1e-15);
}

TEST_CASE("coefficients keep their mode") {
  Coeff a = ex(2);
  Coeff b = Coeff(cdouble(1.0, 1.0));
  CHECK(a.is_exact());
  CHECK_FALSE(b.is_exact());
  CHECK_THROWS_AS(a + b, Error);
  try {
    (void)(a * b);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ModeError);
  }
  CHECK((a * a) == ex(4));
  CHECK(ex(3).divided_by(ex(6)) == ex(1, 2));
  CHECK(std::abs((b * b).numeric() - cdouble(0.0, 2.0)) < 1e-15);
  Ring ring = Ring::numeric(2.0);
  CHECK(std::abs(ring.q_pow(R(3)).numeric() - cdouble(8.0)) < 1e-12);
  CHECK(std::abs(ring.convert(qmono(3, R(2))).numeric() - cdouble(12.0)) < 1e-12);
  CHECK_THROWS_AS(Ring::exact().from_complex(1.0), Error);
  CHECK(std::abs(complex_q_pow(cdouble(0.5), R(-3)) - cdouble(8.0)) < 1e-12);
}
