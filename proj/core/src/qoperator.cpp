#include "qalg/qoperator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

QFactor::QFactor(Rational a_, std::vector<int> alphas_) : a(std::move(a_)), alphas(std::move(alphas_)) {
  std::sort(alphas.begin(), alphas.end());
}

long QFactor::alpha_sum() const {
  long s = 0;
  for (int x : alphas) s += x;
  return s;
}

std::string QFactor::to_string() const {
  std::ostringstream os;
  os << "(" << a.get_str() << ";";
  if (alphas.empty()) os << "∅";
  for (size_t i = 0; i < alphas.size(); ++i) os << (i ? "," : "") << alphas[i];
  os << ")";
  return os.str();
}

bool operator<(const QFactor& x, const QFactor& y) {
  int c = cmp(x.a, y.a);
  if (c != 0) return c < 0;
  if (x.alphas.size() != y.alphas.size()) return x.alphas.size() < y.alphas.size();
  return x.alphas < y.alphas;
}

void QOperator::check_ring(const QOperator& o) const {
  if (ring_.mode != o.ring_.mode) fail(ErrorKind::ModeError, "mixing exact and numeric operators");
  if (!ring_.is_exact() && ring_.q != o.ring_.q) fail(ErrorKind::ModeError, "numeric operators at different q");
}

void QOperator::add(const QFactor& f, const Coeff& c) {
  if (c.mode() != ring_.mode) fail(ErrorKind::ModeError, "coefficient mode differs from operator mode");
  if (c.is_zero()) return;
  auto it = terms_.find(f);
  if (it == terms_.end()) {
    terms_.emplace(f, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Coeff QOperator::coefficient(const QFactor& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? ring_.zero() : it->second;
}

double QOperator::max_magnitude() const {
  double m = 0.0;
  for (const auto& [f, c] : terms_) m = std::max(m, c.magnitude(ring_.q));
  return m;
}

double QOperator::zero_threshold() const { return 1e-12 * (1.0 + max_magnitude()); }

void QOperator::prune() {
  if (ring_.is_exact()) return;
  double eps = zero_threshold();
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second.numeric()) <= eps) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

int QOperator::length() const {
  int l = 0;
  for (const auto& [f, c] : terms_) l = std::max(l, f.ell());
  return l;
}

std::optional<int> QOperator::max_alpha() const {
  std::optional<int> r;
  for (const auto& [f, c] : terms_) {
    if (!f.alphas.empty() && (!r || f.alphas.back() > *r)) r = f.alphas.back();
  }
  return r;
}

std::optional<int> QOperator::min_alpha() const {
  std::optional<int> r;
  for (const auto& [f, c] : terms_) {
    if (!f.alphas.empty() && (!r || f.alphas.front() < *r)) r = f.alphas.front();
  }
  return r;
}

std::optional<Rational> QOperator::max_a() const {
  std::optional<Rational> r;
  for (const auto& [f, c] : terms_) {
    if (!r || f.a > *r) r = f.a;
  }
  return r;
}

QOperator QOperator::operator-() const {
  QOperator r(ring_);
  for (const auto& [f, c] : terms_) r.terms_.emplace(f, -c);
  return r;
}

QOperator& QOperator::operator+=(const QOperator& o) {
  check_ring(o);
  for (const auto& [f, c] : o.terms_) add(f, c);
  prune();
  return *this;
}

QOperator& QOperator::operator-=(const QOperator& o) {
  check_ring(o);
  for (const auto& [f, c] : o.terms_) add(f, -c);
  prune();
  return *this;
}

QOperator operator*(const QOperator& a, const QOperator& b) {
  a.check_ring(b);
  QOperator r(a.ring_);
  for (const auto& [fa, ca] : a.terms_) {
    for (const auto& [fb, cb] : b.terms_) {
      std::vector<int> al = fa.alphas;
      al.insert(al.end(), fb.alphas.begin(), fb.alphas.end());
      r.add(QFactor(fa.a + fb.a, std::move(al)), ca * cb);
    }
  }
  r.prune();
  return r;
}

QOperator QOperator::scaled(const Coeff& c) const {
  QOperator r(ring_);
  for (const auto& [f, x] : terms_) r.add(f, x * c);
  r.prune();
  return r;
}

std::string QOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool unit = c.is_exact() ? c.exact() == QPoly(Rational(1)) : c.numeric() == cdouble(1.0);
    if (!unit) os << "[" << c.to_string() << "]";
    os << f.to_string();
  }
  return os.str();
}

QOperator make_operator(Ring ring, std::initializer_list<std::pair<QFactor, Coeff>> terms) {
  QOperator p(ring);
  for (const auto& [f, c] : terms) p.add(f, c);
  return p;
}

QOperator to_numeric(const QOperator& p, cdouble q) {
  if (!p.ring().is_exact()) {
    if (p.ring().q != q) fail(ErrorKind::ModeError, "operator is numeric at a different q");
    return p;
  }
  QOperator r(Ring::numeric(q));
  // No relative pruning here: evaluation cancels nothing, and huge coefficients must not hide small ones.
  for (const auto& [f, c] : p.terms()) r.add(f, Coeff(c.eval(q)));
  return r;
}

bool approx_equal(const QOperator& a, const QOperator& b, double rel_tol) {
  if (a.mode() != b.mode()) return false;
  if (a.ring().is_exact()) return a == b;
  double scale = 1.0 + std::max(a.max_magnitude(), b.max_magnitude());
  double tol = rel_tol * scale;
  for (const auto& [f, c] : a.terms()) {
    if (std::abs(c.numeric() - b.coefficient(f).numeric()) > tol) return false;
  }
  for (const auto& [f, c] : b.terms()) {
    if (std::abs(c.numeric() - a.coefficient(f).numeric()) > tol) return false;
  }
  return true;
}

Decomposition decompose(const QOperator& p) {
  Decomposition d{QOperator(p.ring()), QOperator(p.ring()), QOperator(p.ring())};
  for (const auto& [f, c] : p.terms()) {
    if (!is_integer(f.a) || f.a < 0) {
      fail(ErrorKind::NonIntegerExponent, "z-exponent " + f.a.get_str() + " is not a nonnegative integer");
    }
    if (f.is_constant()) {
      d.constant.add(f, c);
    } else if (f.a == 0) {
      d.nonshifting.add(f, c);
    } else {
      d.shifting.add(f, c);
    }
  }
  return d;
}

AlphaStats alpha_stats(const QOperator& p) {
  if (p.empty()) fail(ErrorKind::EmptyInput, "alpha statistics of the zero operator");
  Decomposition d = decompose(p);
  AlphaStats s;
  s.nonshifting_max = d.nonshifting.max_alpha();
  s.nonshifting_min = d.nonshifting.min_alpha();
  s.shifting_max = d.shifting.max_alpha();
  s.shifting_min = d.shifting.min_alpha();
  s.max_a = p.max_a();
  return s;
}

}  // namespace qalg
