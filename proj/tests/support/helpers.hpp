#pragma once

#include <qalg/coefficient.hpp>
#include <qalg/parser.hpp>
#include <qalg/qoperator.hpp>
#include <qalg/qpoly.hpp>
#include <qalg/rational.hpp>

#include <string>
#include <vector>

namespace qalg::test {

inline Rational R(long num, long den = 1) { return make_rational(num, den); }

inline QOperator eq(const std::string& text) { return parse_equation(text).parsed; }

inline QOperator fixture(const std::string& name) {
  return load_equation_file(std::string(QALG_FIXTURE_DIR) + "/" + name + ".qeq").parsed;
}

// Ascending integer coefficients of a polynomial in q starting at q^lo.
inline QPoly qpoly(const std::vector<long>& coeffs, long lo = 0) {
  QPoly out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i]) out += QPoly::monomial(R(coeffs[i]), R(lo + static_cast<long>(i)));
  }
  return out;
}

inline Coeff ex(long num, long den = 1) { return Coeff(QPoly(R(num, den))); }

inline Coeff qmono(long coeff, const Rational& exponent) { return Coeff(QPoly::monomial(R(coeff), exponent)); }

inline QFactor F(long a, std::vector<int> alphas) { return QFactor(R(a), std::move(alphas)); }

}  // namespace qalg::test
