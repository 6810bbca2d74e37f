#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qalg/rational.hpp"

namespace qalg {

// Exact Laurent polynomial in q^(1/den) with rational coefficients.
// Stored densely: the coefficient at index i multiplies q^((lo + i) / den).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const Rational& constant);
  static QPoly monomial(const Rational& coeff, const Rational& exponent);
  static QPoly q_power(const Rational& exponent) { return monomial(Rational(1), exponent); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const;
  bool is_monomial() const;
  long denominator() const { return den_; }

  // Exponents are returned in increasing order; requires a nonzero polynomial.
  Rational min_exponent() const;
  Rational max_exponent() const;
  Rational coefficient(const Rational& exponent) const;
  std::vector<std::pair<Rational, Rational>> terms() const;
  // Constant value; requires is_constant().
  Rational constant_value() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.den_ == b.den_ && a.lo_ == b.lo_ && a.c_ == b.c_;
  }

  QPoly pow(unsigned long k) const;
  // Multiply by q^shift.
  QPoly shifted(const Rational& shift) const;
  // q -> 1/q.
  QPoly substitute_inverse_q() const;
  // q^e -> q^(factor * e).
  QPoly scale_exponents(const Rational& factor) const;
  // Exact quotient; throws InexactDivision if the divisor does not divide evenly.
  QPoly divided_by(const QPoly& divisor) const;

  // Principal branch: q^e = exp(e Log q).
  std::complex<double> eval(std::complex<double> q) const;

  // Ascending powers; with explicit_mult the output is valid equation syntax.
  std::string to_string(bool explicit_mult = false) const;

 private:
  QPoly(long den, long lo, std::vector<Rational> c);
  void normalize();
  QPoly with_denominator(long den) const;

  long den_ = 1;
  long lo_ = 0;
  std::vector<Rational> c_;
};

}  // namespace qalg
