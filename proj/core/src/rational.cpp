#include "qalg/rational.hpp"

#include <cmath>
#include <limits>

#include "qalg/errors.hpp"

namespace qalg {

Rational make_rational(long num, long den) {
  if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long to_long(const Rational& r) {
  if (!is_integer(r)) fail(ErrorKind::NonIntegerExponent, "expected an integer, got " + to_string(r));
  if (!r.get_num().fits_slong_p()) fail(ErrorKind::NonIntegerExponent, "integer out of range");
  return r.get_num().get_si();
}

long floor_long(const Rational& r) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return f.get_si();
}

double to_double(const Rational& r) { return r.get_d(); }

std::string to_string(const Rational& r) { return r.get_str(); }

Rational rationalize(double x, long max_den) {
  if (!std::isfinite(x)) fail(ErrorKind::InvalidArgument, "cannot rationalize a non-finite value");
  // Convergents h/k of the continued fraction of x.
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(r);
    if (std::fabs(fl) > 1e15) break;
    long a = static_cast<long>(fl);
    long h2 = a * h1 + h0;
    long k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2;
    k0 = k1; k1 = k2;
    double frac = r - fl;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  if (k1 == 0) return make_rational(static_cast<long>(std::llround(x)));
  return make_rational(h1, k1);
}

}  // namespace qalg
