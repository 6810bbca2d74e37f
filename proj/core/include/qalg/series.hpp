#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "qalg/qoperator.hpp"

namespace qalg {

struct SeriesCoeffs {
  std::vector<Coeff> coeffs;  // f_0, ..., f_N
  Ring ring;
  QOperator source;
  bool f0_supplied = false;
  // Numeric solves run in extended precision; these keep the full exponent range.
  std::vector<std::complex<long double>> wide;

  std::complex<long double> wide_at(size_t n) const;

  size_t size() const { return coeffs.size(); }
};

// Power-series solution of a solved-form equation, by the basic recursion with
// incremental weighted convolutions. f0 is used only when n = 0 leaves f_0 free.
SeriesCoeffs solve_coefficients(const QOperator& p, long n_max, std::optional<Coeff> f0 = std::nullopt);

// [z^n](P f) for 0 <= n <= n_max.
std::vector<Coeff> apply_operator(const QOperator& p, const std::vector<Coeff>& f, long n_max);

std::vector<long> generic_degree(const QOperator& p, long n_max);
// Full max over compositions, for cross-checking.
std::vector<long> generic_degree_compositional(const QOperator& p, long n_max);
std::vector<long> generic_order(const QOperator& p, long n_max);

// For each k, the least N such that [q^k] of C(B) t_n vanishes for N <= n <= n_max,
// where t_n = q^(-H n (n - h) / 2) f_n and C is the crest polynomial at f_0.
std::map<long, std::optional<long>> verify_leading_coefficients(const QOperator& p, const SeriesCoeffs& f,
                                                                const std::vector<long>& ks, long n_max);

struct SeriesValue {
  cdouble value = 0.0;
  std::optional<double> tail_bound;
};

SeriesValue evaluate_series(const SeriesCoeffs& f, cdouble z);

// Newton iteration on phi(z) = (G f)(z).
cdouble find_scalar_zero(const QOperator& g, const SeriesCoeffs& f, cdouble seed, double tol = 1e-12,
                         int max_iter = 100);

// Degree and order in q of an exact coefficient.
Rational q_degree(const Coeff& c);
Rational q_order(const Coeff& c);

}  // namespace qalg
