#pragma once

#include <map>
#include <string>
#include <vector>

#include "qalg/coefficient.hpp"
#include "qalg/rational.hpp"

namespace qalg {

// Univariate Laurent polynomial with Coeff coefficients, indexed by exponent.
class UniPoly {
 public:
  explicit UniPoly(Ring ring = Ring::exact()) : ring_(ring) {}

  const Ring& ring() const { return ring_; }
  const std::map<Rational, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Rational& exponent, const Coeff& c);
  Coeff coefficient(const Rational& exponent) const;
  // Requires a nonzero polynomial.
  Rational degree() const;
  Rational order() const;

  cdouble eval(cdouble x) const;
  // Exact evaluation at an exact point; exponents must be nonnegative integers.
  QPoly eval_exact(const QPoly& x) const;

  // Ascending complex coefficients of p / x^order at the ring's q (or the given q
  // for exact polynomials); exponents must be integers.
  std::vector<cdouble> numeric_dense(cdouble q) const;
  std::vector<cdouble> numeric_dense() const { return numeric_dense(ring_.q); }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  std::string to_string(const std::string& var) const;

 private:
  Ring ring_;
  std::map<Rational, Coeff> terms_;
};

}  // namespace qalg
