#pragma once

#include <complex>
#include <string>
#include <variant>

#include "qalg/qpoly.hpp"
#include "qalg/rational.hpp"

namespace qalg {

using cdouble = std::complex<double>;

enum class Mode { Exact, Numeric };

// Either an exact Laurent polynomial in q or a complex double.
class Coeff {
 public:
  Coeff() : v_(QPoly()) {}
  Coeff(QPoly p) : v_(std::move(p)) {}
  Coeff(cdouble z) : v_(z) {}

  Mode mode() const { return v_.index() == 0 ? Mode::Exact : Mode::Numeric; }
  bool is_exact() const { return v_.index() == 0; }
  const QPoly& exact() const;
  cdouble numeric() const;

  bool is_zero() const;
  // Numeric values are zero when |c| <= eps; exact values only when literally zero.
  bool is_negligible(double eps) const;
  double magnitude(cdouble q) const;

  cdouble eval(cdouble q) const;

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend bool operator==(const Coeff& a, const Coeff& b) { return a.v_ == b.v_; }

  // Exact quotient for exact values; throws InexactDivision when it does not exist.
  Coeff divided_by(const Coeff& o) const;
  Coeff pow(unsigned long k) const;

  std::string to_string() const;

 private:
  void check_mode(const Coeff& o) const;
  std::variant<QPoly, cdouble> v_;
};

// Numeric coefficient ring or exact one; numeric rings carry the value of q.
struct Ring {
  Mode mode = Mode::Exact;
  cdouble q = 0.0;

  static Ring exact() { return Ring{Mode::Exact, 0.0}; }
  static Ring numeric(cdouble q) { return Ring{Mode::Numeric, q}; }

  bool is_exact() const { return mode == Mode::Exact; }
  Coeff zero() const;
  Coeff one() const;
  Coeff from_rational(const Rational& r) const;
  Coeff from_complex(cdouble z) const;
  // q^e on the principal branch; integer powers are computed by repeated products.
  Coeff q_pow(const Rational& e) const;
  // Brings c into this ring, evaluating exact values at q when numeric.
  Coeff convert(const Coeff& c) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.mode == b.mode && a.q == b.q; }
};

cdouble complex_q_pow(cdouble q, const Rational& e);

}  // namespace qalg
