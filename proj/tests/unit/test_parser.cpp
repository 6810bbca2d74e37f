#include <doctest.h>

#include "helpers.hpp"

#include <qalg/errors.hpp>
#include <qalg/printer.hpp>
#include <qalg/transforms.hpp>

#include <string>

using namespace qalg;
using namespace qalg::test;

namespace {

const char* kFixtures[] = {"qcatalan", "drake1",    "drake2",     "gessel",         "bargraphs",
                           "qpainleve1", "qpainleve_h", "cfa",      "running8",       "linearize2",
                           "nonterminating", "sfexa", "gevrey_half", "jones8"};

Error parse_error(const std::string& text, Ring ring = Ring::exact()) {
  try {
    parse_equation(text, ring);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a parse error for " << text);
  return Error(ErrorKind::InvalidArgument, "");
}

}  // namespace

TEST_CASE("q-Catalan text") {
  EquationSource src = parse_equation("f(z) = 1 + z*f(z)*f(q*z)");
  QOperator want = make_operator(Ring::exact(), {{F(0, {0}), ex(1)}, {F(0, {}), ex(-1)}, {F(1, {0, 1}), ex(-1)}});
  CHECK(src.parsed == want);
  CHECK(src.q_denominator == 1);
  CHECK(src.mode == Mode::Exact);
}

TEST_CASE("q-Painleve I text") {
  QOperator p = eq("f(z) = f(z/q)*f(z)^2*f(q*z) + z");
  QOperator want =
      make_operator(Ring::exact(), {{F(0, {0}), ex(1)}, {F(0, {-1, 0, 0, 1}), ex(-1)}, {F(1, {}), ex(-1)}});
  CHECK(p == want);
}

TEST_CASE("lhs minus rhs sign convention") {
  CHECK(eq("f(z)=0") == make_operator(Ring::exact(), {{F(0, {0}), ex(1)}}));
  CHECK(eq("f(z)") == eq("f(z) = 0"));
  CHECK(eq("0 = f(z)") == make_operator(Ring::exact(), {{F(0, {0}), ex(-1)}}));
}

TEST_CASE("arguments and exponents") {
  CHECK(eq("f(q^3*z) = z") == eq("f(q^3*z) - z = 0"));
  CHECK(parse_error("z/q").kind() == ErrorKind::SyntaxError);
  CHECK(eq("f(z/q^2)") == make_operator(Ring::exact(), {{F(0, {-2}), ex(1)}}));
  CHECK(eq("z^(3/2)*f(z)") == make_operator(Ring::exact(), {{QFactor(R(3, 2), {0}), ex(1)}}));
  EquationSource half = parse_equation("q^(1/2)*f(z) + q^(-1/3)");
  CHECK(half.q_denominator == 6);
  CHECK(half.parsed.coefficient(F(0, {0})) == qmono(1, R(1, 2)));
  CHECK(half.parsed.coefficient(F(0, {})) == qmono(1, R(-1, 3)));
  CHECK(eq("(1+q)^2*f(z)") == make_operator(Ring::exact(), {{F(0, {0}), Coeff(qpoly({1, 2, 1}))}}));
  CHECK(eq("-f(z) + 3/4") == make_operator(Ring::exact(), {{F(0, {0}), ex(-1)}, {F(0, {}), ex(3, 4)}}));
  CHECK(eq("# comment line\nf(z) = 1") == eq("f(z) - 1"));
}

TEST_CASE("syntax errors report a position") {
  Error e = parse_error("f(z) = 1 +* z");
  CHECK(e.kind() == ErrorKind::SyntaxError);
  CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  Error multi = parse_error("f(z) = 1\n  + )");
  CHECK(multi.kind() == ErrorKind::SyntaxError);
  CHECK(std::string(multi.what()).find("line 2") != std::string::npos);
  CHECK(parse_error("f(z) = 1 = 2").kind() == ErrorKind::SyntaxError);
  CHECK(parse_error("f(2*z)").kind() == ErrorKind::SyntaxError);
  CHECK(parse_error("").kind() == ErrorKind::SyntaxError);
}

TEST_CASE("non-integer shift indices are rejected") {
  CHECK(parse_error("f(q^(1/2)*z)").kind() == ErrorKind::NonIntegerSigmaIndex);
}

TEST_CASE("the imaginary unit needs a numeric ring") {
  CHECK(parse_error("i*f(z)").kind() == ErrorKind::SyntaxError);
  QOperator p = parse_equation("i*f(z) + q", Ring::numeric(cdouble(2.0))).parsed;
  CHECK(p.coefficient(F(0, {0})) == Coeff(cdouble(0.0, 1.0)));
  CHECK(p.coefficient(F(0, {})) == Coeff(cdouble(2.0)));
}

TEST_CASE("printing and reparsing every fixture") {
  for (const char* name : kFixtures) {
    CAPTURE(name);
    QOperator p = fixture(name);
    CHECK_FALSE(p.empty());
    CHECK(eq(to_equation_string(p)) == p);
  }
}

TEST_CASE("Y notation") {
  CHECK(to_y_notation(fixture("qcatalan")) == "-1 + Y_0 - z*Y_0*Y_1");
}

TEST_CASE("figure-eight fixture shift statistics") {
  // The fixture is written for J(z/q); one right shift recovers J(z).
  AlphaStats s = alpha_stats(sigma_conjugate(fixture("jones8"), -1, Side::Right));
  REQUIRE(s.shifting_max);
  REQUIRE(s.shifting_min);
  CHECK(*s.shifting_max == 7);
  CHECK(*s.shifting_min == -1);
  CHECK(*s.nonshifting_max == 5);
  CHECK(*s.nonshifting_min == 1);
}
