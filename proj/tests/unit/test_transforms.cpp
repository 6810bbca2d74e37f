#include <doctest.h>

#include "helpers.hpp"

#include <qalg/errors.hpp>
#include <qalg/transforms.hpp>

using namespace qalg;
using namespace qalg::test;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("translating q-Catalan by its constant term") {
  QOperator p = fixture("qcatalan");
  QOperator g = step_translate_simplify(p, ex(1));
  CHECK(g == eq("f(z) = 1 + z*f(z) + q*z*f(q*z) + q*z^2*f(z)*f(q*z)"));
  CHECK(constant_after_translation(p, ex(1)).is_zero());
  CHECK(constant_after_translation(p, ex(2)) == ex(1));
  CHECK(kind_of([&] { step_translate_simplify(p, ex(2)); }) == ErrorKind::ConstantNotRoot);
}

TEST_CASE("translation by a monomial") {
  // f = c z + g in f(z) = z + f(qz)^2
  QOperator p = eq("f(z) = z + f(q*z)^2");
  QOperator t = translate(p, ex(3), R(1));
  QOperator want = eq("f(z) + 3*z = z + f(q*z)^2 + 6*q*z*f(q*z) + 9*q^2*z^2");
  CHECK(t == want);
  CHECK(translate(p, ex(0), R(1)) == p);
}

TEST_CASE("simplification divides by z") {
  QOperator p = eq("z*f(z) - z^2 = z^3*f(q*z)^2");
  QOperator s = simplify_by_z(p);
  // f = z g: z^2 g - z^2 - z^5 q^2 g(qz)^2, then divide by z.
  CHECK(s == eq("z*f(z) - z - q^2*z^4*f(q*z)^2 = 0"));
  CHECK(kind_of([&] { simplify_by_z(eq("f(z) = 1")); }) == ErrorKind::NonzeroConstant);
}

TEST_CASE("sigma conjugation") {
  QOperator p = eq("f(z) = 1 + z*f(z)*f(q*z)");
  QOperator right = sigma_conjugate(p, 2, Side::Right);
  CHECK(right == eq("f(q^2*z) = 1 + z*f(q^2*z)*f(q^3*z)"));
  QOperator left = sigma_conjugate(p, 1, Side::Left);
  CHECK(left == eq("f(q*z) = 1 + q*z*f(q*z)*f(q^2*z)"));
  CHECK(sigma_conjugate(right, -2, Side::Right) == p);
}

TEST_CASE("reflection is an involution") {
  QOperator p = eq("f(z) = 1 + q^2*z*f(z/q)*f(q^3*z) + (1+q)*z^2*f(z)");
  QOperator r = reflect(p, true);
  CHECK(r == eq("f(z) = 1 + q^(-2)*z*f(z/q^3)*f(q*z) + (1+q^(-1))*z^2*f(z)"));
  CHECK(reflect(r, true) == p);
  CHECK(reflect(reflect(p, false), false) == p);
}

TEST_CASE("derivative with respect to one shift") {
  QOperator p = eq("(f(z) - 1 - z)^2 = 0");
  CHECK(derivative(p, 0) == eq("2*f(z) - 2 - 2*z = 0"));
  CHECK(derivative(p, 1).empty());
  QOperator m = eq("f(z)^2*f(q*z)^3 = 0");
  CHECK(derivative(m, 1) == eq("3*f(z)^2*f(q*z)^2 = 0"));
}

TEST_CASE("scaling the argument") {
  QOperator p = fixture("qcatalan");
  CHECK(scale_argument(p, ex(2)) == eq("f(z) = 1 + 2*z*f(z)*f(q*z)"));
  CHECK(scale_argument(scale_argument(p, ex(2)), ex(1, 2)) == p);
}

TEST_CASE("ramification clears fractional z exponents") {
  QOperator p = fixture("sfexa");
  QOperator r = ramify(p, 6);
  CHECK(r == eq("f(z)*f(q*z)^2*f(q^2*z) - f(q*z) + q^6*z^3 + z^8 = 0"));
  CHECK(kind_of([&] { ramify(p, 2); }) == ErrorKind::IncompatibleDenominator);
  QOperator n = to_numeric(eq("f(z) = q*z^(1/2)"), 4.0);
  QOperator rn = ramify(n, 2);
  CHECK(std::abs(rn.ring().q - cdouble(2.0)) < 1e-15);
}
