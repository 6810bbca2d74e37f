#include "qalg/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "convolution.hpp"
#include "qalg/asymptotics.hpp"
#include "qalg/errors.hpp"
#include "qalg/solver.hpp"

namespace qalg {

namespace {

Coeff weighted(const Ring& ring, const Coeff& f, long exponent) {
  if (exponent == 0 || f.is_zero()) return f;
  if (f.is_exact()) return Coeff(f.exact().shifted(Rational(exponent)));
  return Coeff(f.numeric() * complex_q_pow(ring.q, Rational(exponent)));
}

auto coeff_add = [](const Coeff& a, const Coeff& b) { return a + b; };
auto coeff_mul = [](const Coeff& a, const Coeff& b) { return a * b; };

using CoeffChain = detail::ChainConvolution<Coeff, decltype(coeff_add), decltype(coeff_mul)>;

struct ShiftingTerm {
  long a;
  Coeff c;
  CoeffChain chain;
};

std::vector<ShiftingTerm> shifting_terms(const QOperator& part) {
  std::vector<ShiftingTerm> out;
  for (const auto& [f, c] : part.terms()) {
    out.push_back(ShiftingTerm{to_long(f.a), c, CoeffChain(f.alphas, coeff_add, coeff_mul)});
  }
  return out;
}

}  // namespace

namespace {

using cld = std::complex<long double>;

cld wide_pow(cld q, long k) {
  cld base = k < 0 ? cld(1) / q : q;
  unsigned long n = static_cast<unsigned long>(k < 0 ? -k : k);
  cld r = 1;
  while (n > 0) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return r;
}

cld widen(cdouble z) { return cld(z.real(), z.imag()); }

SeriesCoeffs solve_numeric(const QOperator& p, const Decomposition& d, long n_max, std::optional<Coeff> f0) {
  const Ring& ring = p.ring();
  cld q = widen(ring.q);
  auto add = [](const cld& a, const cld& b) { return a + b; };
  auto mul = [](const cld& a, const cld& b) { return a * b; };
  using Chain = detail::ChainConvolution<cld, decltype(add), decltype(mul)>;
  struct Term {
    long a;
    cld c;
    Chain chain;
  };
  std::vector<Term> terms;
  for (const auto& [f, c] : d.shifting.terms()) terms.push_back(Term{to_long(f.a), widen(c.numeric()), Chain(f.alphas, add, mul)});
  SeriesCoeffs out{{}, ring, p, false, {}};
  long double scale = p.max_magnitude();
  for (long n = 0; n <= n_max; ++n) {
    cld rest = widen(d.constant.coefficient(QFactor(Rational(n), {})).numeric());
    for (auto& t : terms) {
      if (n - t.a >= 0) rest += t.c * t.chain.top(static_cast<size_t>(n - t.a));
    }
    cld denom = 0;
    long double denom_scale = 0;
    for (const auto& [f, c] : d.nonshifting.terms()) {
      cld term = widen(c.numeric()) * wide_pow(q, static_cast<long>(f.alphas[0]) * n);
      denom += term;
      denom_scale += std::abs(term);
    }
    cld fn;
    if (std::abs(denom) <= 1e-12L * denom_scale) {
      if (n > 0) fail(ErrorKind::UniquenessViolated, "uniqueness condition fails at n = " + std::to_string(n));
      if (std::abs(rest) > 1e-12L * (1 + scale)) fail(ErrorKind::UniquenessViolated, "no solution with n = 0 term");
      if (!f0) fail(ErrorKind::MissingInitialValue, "f_0 is free; supply it");
      fn = widen(ring.convert(*f0).numeric());
      out.f0_supplied = true;
    } else {
      fn = -rest / denom;
    }
    if (!std::isfinite(fn.real()) || !std::isfinite(fn.imag())) {
      fail(ErrorKind::NoConvergence, "coefficient " + std::to_string(n) + " exceeds the extended floating range");
    }
    out.wide.push_back(fn);
    out.coeffs.push_back(Coeff(cdouble(static_cast<double>(fn.real()), static_cast<double>(fn.imag()))));
    for (auto& t : terms) {
      t.chain.push([&](int alpha) { return fn * wide_pow(q, static_cast<long>(alpha) * n); });
    }
  }
  return out;
}

}  // namespace

std::complex<long double> SeriesCoeffs::wide_at(size_t n) const {
  if (n < wide.size()) return wide[n];
  cdouble z = coeffs.at(n).numeric();
  return {z.real(), z.imag()};
}

SeriesCoeffs solve_coefficients(const QOperator& p, long n_max, std::optional<Coeff> f0) {
  if (!is_in_solved_form(p)) fail(ErrorKind::NotSolvedForm, "coefficient recursion needs a solved form");
  if (n_max < 0) fail(ErrorKind::InvalidArgument, "negative number of terms");
  const Ring& ring = p.ring();
  Decomposition d = decompose(p);
  if (!ring.is_exact()) return solve_numeric(p, d, n_max, f0);
  std::vector<ShiftingTerm> terms = shifting_terms(d.shifting);
  SeriesCoeffs out{{}, ring, p, false, {}};
  for (long n = 0; n <= n_max; ++n) {
    Coeff rest = d.constant.coefficient(QFactor(Rational(n), {}));
    for (auto& t : terms) {
      if (n - t.a >= 0) rest += t.c * t.chain.top(static_cast<size_t>(n - t.a));
    }
    Coeff denom = ring.zero();
    for (const auto& [f, c] : d.nonshifting.terms()) denom += weighted(ring, c, static_cast<long>(f.alphas[0]) * n);
    Coeff fn;
    if (denom.is_zero()) {
      if (n > 0) fail(ErrorKind::UniquenessViolated, "uniqueness condition fails at n = " + std::to_string(n));
      if (!rest.is_zero()) fail(ErrorKind::UniquenessViolated, "no solution with n = 0 term");
      if (!f0) fail(ErrorKind::MissingInitialValue, "f_0 is free; supply it");
      fn = ring.convert(*f0);
      out.f0_supplied = true;
    } else {
      fn = (-rest).divided_by(denom);
    }
    out.coeffs.push_back(fn);
    for (auto& t : terms) {
      t.chain.push([&](int alpha) { return weighted(ring, fn, static_cast<long>(alpha) * n); });
    }
  }
  return out;
}

std::vector<Coeff> apply_operator(const QOperator& p, const std::vector<Coeff>& f, long n_max) {
  const Ring& ring = p.ring();
  std::vector<Coeff> out(static_cast<size_t>(n_max + 1), ring.zero());
  for (const auto& [fac, c] : p.terms()) {
    long a = to_long(fac.a);
    if (a < 0) fail(ErrorKind::NonIntegerExponent, "negative z-exponent");
    if (a > n_max) continue;
    if (fac.is_constant()) {
      out[a] += c;
      continue;
    }
    CoeffChain chain(fac.alphas, coeff_add, coeff_mul);
    for (long m = 0; m + a <= n_max; ++m) {
      Coeff fm = m < static_cast<long>(f.size()) ? ring.convert(f[m]) : ring.zero();
      chain.push([&](int alpha) { return weighted(ring, fm, static_cast<long>(alpha) * m); });
      out[m + a] += c * chain.top(static_cast<size_t>(m));
    }
  }
  return out;
}

namespace {

void require_solved(const QOperator& p) {
  if (!is_in_solved_form(p)) fail(ErrorKind::NotSolvedForm, "generic sequences need a solved form");
}

// Max-plus (or min-plus) recursion over the shifting factors.
template <class Better>
std::vector<long> generic_sequence(const QOperator& p, long n_max, Better better, bool top_only) {
  Decomposition d = decompose(p);
  auto plus = [](long x, long y) { return x + y; };
  auto pick = [&](long x, long y) { return better(x, y) ? x : y; };
  using Chain = detail::ChainConvolution<long, decltype(pick), decltype(plus)>;
  struct Term {
    long a;
    std::vector<int> alphas;
    Chain chain;
  };
  std::vector<Term> terms;
  for (const auto& [f, c] : d.shifting.terms()) {
    terms.push_back(Term{to_long(f.a), f.alphas, Chain(f.alphas, pick, plus)});
  }
  std::vector<long> seq;
  for (long n = 0; n <= n_max; ++n) {
    std::optional<long> val;
    if (!d.constant.coefficient(QFactor(Rational(n), {})).is_zero()) val = 0;
    for (auto& t : terms) {
      if (n - t.a < 0) continue;
      long cand;
      if (top_only) {
        if (t.alphas.back() < 0) continue;
        cand = static_cast<long>(t.alphas.back()) * (n - t.a) + seq[n - t.a];
      } else {
        cand = t.chain.top(static_cast<size_t>(n - t.a));
      }
      if (!val || better(cand, *val)) val = cand;
    }
    seq.push_back(val.value_or(0));
    for (auto& t : terms) {
      long s = seq.back();
      t.chain.push([&](int alpha) { return static_cast<long>(alpha) * n + s; });
    }
  }
  return seq;
}

}  // namespace

std::vector<long> generic_degree(const QOperator& p, long n_max) {
  require_solved(p);
  if (decompose(p).nonshifting.max_alpha() != 0) fail(ErrorKind::NotNormalized, "needs max alpha of P0 = 0");
  return generic_sequence(p, n_max, [](long x, long y) { return x > y; }, true);
}

std::vector<long> generic_degree_compositional(const QOperator& p, long n_max) {
  require_solved(p);
  if (decompose(p).nonshifting.max_alpha() != 0) fail(ErrorKind::NotNormalized, "needs max alpha of P0 = 0");
  return generic_sequence(p, n_max, [](long x, long y) { return x > y; }, false);
}

std::vector<long> generic_order(const QOperator& p, long n_max) {
  require_solved(p);
  if (decompose(p).nonshifting.min_alpha() != 0) fail(ErrorKind::NotNormalized, "needs min alpha of P0 = 0");
  return generic_sequence(p, n_max, [](long x, long y) { return x < y; }, false);
}

std::map<long, std::optional<long>> verify_leading_coefficients(const QOperator& p, const SeriesCoeffs& f,
                                                                const std::vector<long>& ks, long n_max) {
  if (!f.ring.is_exact() || !p.ring().is_exact()) fail(ErrorKind::ModeError, "leading coefficients need exact mode");
  for (const auto& [fac, c] : p.terms()) {
    if (!c.exact().is_constant()) fail(ErrorKind::NotApplicable, "coefficients must not depend on q");
  }
  AlphaStats st = alpha_stats(p);
  if (st.nonshifting_max != 0 || !st.shifting_max || *st.shifting_max <= 0) {
    fail(ErrorKind::NotApplicable, "needs 0 = max alpha(P0) < max alpha(P+)");
  }
  if (n_max >= static_cast<long>(f.size())) fail(ErrorKind::InvalidArgument, "not enough coefficients");
  CrestReport cr = crest(p, f.coeffs.at(0));
  std::vector<QPoly> t;
  for (long n = 0; n <= n_max; ++n) {
    t.push_back(f.coeffs[n].exact().shifted(-cr.H * n * (n - cr.h) / 2));
  }
  std::vector<QPoly> v;
  for (long n = 0; n <= n_max; ++n) {
    QPoly s;
    for (const auto& [e, c] : cr.crest_poly.terms()) {
      long i = to_long(e);
      if (n - i >= 0) s += c.exact() * t[n - i];
    }
    v.push_back(s);
  }
  std::map<long, std::optional<long>> out;
  for (long k : ks) {
    std::optional<long> first;
    for (long n = n_max; n >= 0; --n) {
      if (v[n].coefficient(Rational(k)) != 0) break;
      first = n;
    }
    out[k] = first;
  }
  return out;
}

SeriesValue evaluate_series(const SeriesCoeffs& f, cdouble z) {
  if (f.ring.is_exact()) fail(ErrorKind::ModeError, "series evaluation needs numeric coefficients");
  SeriesValue out;
  size_t n = f.coeffs.size();
  for (size_t i = n; i-- > 0;) out.value = out.value * z + f.coeffs[i].numeric();
  if (n >= 2) {
    double last = std::abs(f.coeffs[n - 1].numeric());
    double prev = std::abs(f.coeffs[n - 2].numeric());
    if (prev > 0) {
      double ratio = last / prev * std::abs(z);
      if (ratio < 1.0) out.tail_bound = last * std::pow(std::abs(z), static_cast<double>(n - 1)) / (1.0 - ratio);
    } else if (last == 0) {
      out.tail_bound = 0.0;
    }
  }
  return out;
}

cdouble find_scalar_zero(const QOperator& g_in, const SeriesCoeffs& f, cdouble seed, double tol, int max_iter) {
  if (f.ring.is_exact()) fail(ErrorKind::ModeError, "zero finding needs numeric coefficients");
  cdouble q = f.ring.q;
  QOperator g = to_numeric(g_in, q);
  auto phi = [&](cdouble z) {
    cdouble s = 0.0;
    for (const auto& [fac, c] : g.terms()) {
      cdouble t = c.numeric() * complex_q_pow(z, fac.a);
      for (int a : fac.alphas) t *= evaluate_series(f, complex_q_pow(q, Rational(a)) * z).value;
      s += t;
    }
    return s;
  };
  cdouble z = seed;
  for (int it = 0; it < max_iter; ++it) {
    cdouble v = phi(z);
    if (std::abs(v) <= tol) return z;
    double h = 1e-6 * (1.0 + std::abs(z));
    cdouble dv = (phi(z + h) - phi(z - h)) / (2.0 * h);
    if (std::abs(dv) < 1e-300 || !std::isfinite(std::abs(dv))) break;
    z -= v / dv;
    if (!std::isfinite(std::abs(z))) break;
  }
  fail(ErrorKind::NoConvergence, "Newton iteration found no zero");
}

Rational q_degree(const Coeff& c) { return c.exact().max_exponent(); }

Rational q_order(const Coeff& c) { return c.exact().min_exponent(); }

}  // namespace qalg
