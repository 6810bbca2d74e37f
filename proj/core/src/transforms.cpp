#include "qalg/transforms.hpp"

#include <map>

#include "qalg/errors.hpp"

namespace qalg {

namespace {

Rational binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

}  // namespace

QOperator translate(const QOperator& p, const Coeff& c_in, const Rational& mu) {
  const Ring& ring = p.ring();
  Coeff c = ring.convert(c_in);
  if (c.is_zero()) return p;
  QOperator out(ring);
  int maxl = p.length();
  std::vector<Coeff> cpow(maxl + 1, ring.one());
  for (int i = 1; i <= maxl; ++i) cpow[i] = cpow[i - 1] * c;
  for (const auto& [f, coeff] : p.terms()) {
    // Group equal alphas: (c q^(beta mu) z^mu + Y_beta)^m expands binomially.
    std::vector<std::pair<int, int>> groups;
    for (int a : f.alphas) {
      if (!groups.empty() && groups.back().first == a) {
        ++groups.back().second;
      } else {
        groups.emplace_back(a, 1);
      }
    }
    // choice[g] = number of Y_beta kept in group g.
    std::vector<int> keep(groups.size(), 0);
    while (true) {
      int removed = 0;
      long removed_sum = 0;
      Rational mult(1);
      std::vector<int> alphas;
      for (size_t g = 0; g < groups.size(); ++g) {
        auto [beta, m] = groups[g];
        int r = m - keep[g];
        removed += r;
        removed_sum += static_cast<long>(beta) * r;
        mult *= binomial(m, keep[g]);
        alphas.insert(alphas.end(), keep[g], beta);
      }
      Coeff term = coeff * cpow[removed] * ring.from_rational(mult);
      if (removed_sum != 0 && mu != 0) term *= ring.q_pow(mu * removed_sum);
      out.add(QFactor(f.a + mu * removed, std::move(alphas)), term);
      size_t g = 0;
      while (g < groups.size() && keep[g] == groups[g].second) keep[g++] = 0;
      if (g == groups.size()) break;
      ++keep[g];
    }
  }
  out.prune();
  return out;
}

QOperator simplify_by_z(const QOperator& p) {
  const Ring& ring = p.ring();
  QFactor unit(Rational(0), {});
  Coeff k = p.coefficient(unit);
  if (!k.is_zero()) {
    if (ring.is_exact() || std::abs(k.numeric()) > p.zero_threshold()) {
      fail(ErrorKind::NonzeroConstant, "constant coefficient " + k.to_string() + " is not zero");
    }
  }
  QOperator out(ring);
  for (const auto& [f, c] : p.terms()) {
    if (f == unit) continue;
    Coeff term = c;
    if (f.alpha_sum() != 0) term *= ring.q_pow(Rational(f.alpha_sum()));
    out.add(QFactor(f.a + f.ell() - 1, f.alphas), term);
  }
  out.prune();
  return out;
}

Coeff constant_after_translation(const QOperator& p, const Coeff& c_in) {
  const Ring& ring = p.ring();
  Coeff c = ring.convert(c_in);
  Coeff s = ring.zero();
  for (const auto& [f, coeff] : p.terms()) {
    if (f.a == 0) s += coeff * c.pow(static_cast<unsigned long>(f.ell()));
  }
  return s;
}

QOperator step_translate_simplify(const QOperator& p, const Coeff& c) {
  QOperator t = translate(p, c, Rational(0));
  Coeff k = t.coefficient(QFactor(Rational(0), {}));
  if (!k.is_zero()) {
    double scale = p.ring().is_exact() ? 0.0 : 1e-9 * (1.0 + p.max_magnitude()) * (1.0 + std::pow(std::abs(c.eval(p.ring().q)), p.length()));
    if (p.ring().is_exact() || std::abs(k.numeric()) > scale) {
      fail(ErrorKind::ConstantNotRoot, "c is not a root of the constant term");
    }
    t.add(QFactor(Rational(0), {}), -k);
  }
  return simplify_by_z(t);
}

QOperator sigma_conjugate(const QOperator& p, int k, Side side) {
  const Ring& ring = p.ring();
  QOperator out(ring);
  for (const auto& [f, c] : p.terms()) {
    std::vector<int> al = f.alphas;
    for (int& x : al) x += k;
    Coeff term = c;
    if (side == Side::Left && k != 0 && f.a != 0) term *= ring.q_pow(f.a * k);
    out.add(QFactor(f.a, std::move(al)), term);
  }
  out.prune();
  return out;
}

QOperator reflect(const QOperator& p, bool substitute_inverse_q) {
  Ring ring = p.ring();
  if (substitute_inverse_q && !ring.is_exact()) ring.q = 1.0 / ring.q;
  QOperator out(ring);
  for (const auto& [f, c] : p.terms()) {
    std::vector<int> al;
    for (auto it = f.alphas.rbegin(); it != f.alphas.rend(); ++it) al.push_back(-*it);
    Coeff term = c;
    if (substitute_inverse_q && c.is_exact()) term = Coeff(c.exact().substitute_inverse_q());
    out.add(QFactor(f.a, std::move(al)), term);
  }
  return out;
}

QOperator scale_argument(const QOperator& p, const Coeff& lambda_in) {
  const Ring& ring = p.ring();
  Coeff lambda = ring.convert(lambda_in);
  if (lambda.is_zero()) fail(ErrorKind::InvalidArgument, "scaling by zero");
  QOperator out(ring);
  for (const auto& [f, c] : p.terms()) {
    Coeff factor = ring.one();
    if (ring.is_exact()) {
      if (!is_integer(f.a)) fail(ErrorKind::NonRepresentableExponent, "lambda^a with non-integer a");
      long a = to_long(f.a);
      if (a >= 0) {
        factor = lambda.pow(static_cast<unsigned long>(a));
      } else {
        factor = ring.one().divided_by(lambda).pow(static_cast<unsigned long>(-a));
      }
    } else {
      factor = Coeff(complex_q_pow(lambda.numeric(), f.a));
    }
    out.add(f, c * factor);
  }
  out.prune();
  return out;
}

QOperator derivative(const QOperator& p, int gamma) {
  QOperator out(p.ring());
  for (const auto& [f, c] : p.terms()) {
    int count = 0;
    for (int x : f.alphas) count += (x == gamma);
    if (count == 0) continue;
    std::vector<int> al = f.alphas;
    for (auto it = al.begin(); it != al.end(); ++it) {
      if (*it == gamma) {
        al.erase(it);
        break;
      }
    }
    out.add(QFactor(f.a, std::move(al)), c * p.ring().from_rational(count));
  }
  out.prune();
  return out;
}

QOperator ramify(const QOperator& p, long factor) {
  if (factor < 1) fail(ErrorKind::InvalidArgument, "ramification index must be positive");
  for (const auto& [f, c] : p.terms()) {
    if (factor % f.a.get_den() != 0) {
      fail(ErrorKind::IncompatibleDenominator, "z-exponent " + f.a.get_str() + " needs a different index");
    }
  }
  Ring ring = p.ring();
  if (!ring.is_exact()) ring.q = complex_q_pow(ring.q, make_rational(1, factor));
  QOperator out(ring);
  for (const auto& [f, c] : p.terms()) {
    Coeff term = c;
    if (c.is_exact()) term = Coeff(c.exact().scale_exponents(Rational(factor)));
    out.add(QFactor(f.a * factor, f.alphas), term);
  }
  return out;
}

}  // namespace qalg
