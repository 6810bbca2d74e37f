#include "qalg/qpoly.hpp"

#include <numeric>
#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

namespace {

long checked_long(const mpz_class& z) {
  if (!z.fits_slong_p()) fail(ErrorKind::NonRepresentableExponent, "q-exponent out of range");
  return z.get_si();
}

}  // namespace

QPoly::QPoly(long den, long lo, std::vector<Rational> c) : den_(den), lo_(lo), c_(std::move(c)) {
  normalize();
}

QPoly::QPoly(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

QPoly QPoly::monomial(const Rational& coeff, const Rational& exponent) {
  if (coeff == 0) return QPoly();
  return QPoly(checked_long(exponent.get_den()), checked_long(exponent.get_num()), {coeff});
}

void QPoly::normalize() {
  size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    den_ = 1;
    lo_ = 0;
    return;
  }
  size_t last = c_.size();
  while (c_[last - 1] == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_ = std::vector<Rational>(c_.begin() + first, c_.begin() + last);
    lo_ += static_cast<long>(first);
  }
  long g = den_;
  for (size_t i = 0; i < c_.size() && g > 1; ++i) {
    if (c_[i] != 0) g = std::gcd(g, lo_ + static_cast<long>(i));
  }
  if (g > 1) {
    std::vector<Rational> nc((c_.size() - 1) / g + 1);
    for (size_t i = 0; i < c_.size(); i += g) nc[i / g] = c_[i];
    c_ = std::move(nc);
    lo_ /= g;
    den_ /= g;
  }
}

QPoly QPoly::with_denominator(long den) const {
  if (den == den_ || is_zero()) return *this;
  long f = den / den_;
  QPoly r;
  r.den_ = den;
  r.lo_ = lo_ * f;
  r.c_.assign((c_.size() - 1) * f + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * f] = c_[i];
  return r;
}

bool QPoly::is_constant() const { return is_zero() || (c_.size() == 1 && lo_ == 0); }

bool QPoly::is_monomial() const { return c_.size() == 1; }

Rational QPoly::min_exponent() const {
  if (is_zero()) fail(ErrorKind::ZeroPolynomial, "exponent of the zero polynomial");
  return make_rational(lo_, den_);
}

Rational QPoly::max_exponent() const {
  if (is_zero()) fail(ErrorKind::ZeroPolynomial, "exponent of the zero polynomial");
  return make_rational(lo_ + static_cast<long>(c_.size()) - 1, den_);
}

Rational QPoly::coefficient(const Rational& exponent) const {
  if (is_zero()) return 0;
  Rational idx = exponent * den_ - lo_;
  if (!is_integer(idx)) return 0;
  if (idx < 0 || idx >= static_cast<long>(c_.size())) return 0;
  return c_[idx.get_num().get_si()];
}

std::vector<std::pair<Rational, Rational>> QPoly::terms() const {
  std::vector<std::pair<Rational, Rational>> out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) out.emplace_back(make_rational(lo_ + static_cast<long>(i), den_), c_[i]);
  }
  return out;
}

Rational QPoly::constant_value() const {
  if (!is_constant()) fail(ErrorKind::InvalidArgument, "polynomial is not a constant");
  return is_zero() ? Rational(0) : c_[0];
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long den = std::lcm(den_, o.den_);
  QPoly a = with_denominator(den);
  QPoly b = o.with_denominator(den);
  long lo = std::min(a.lo_, b.lo_);
  long hi = std::max(a.lo_ + static_cast<long>(a.c_.size()), b.lo_ + static_cast<long>(b.c_.size()));
  std::vector<Rational> c(hi - lo);
  for (size_t i = 0; i < a.c_.size(); ++i) c[a.lo_ - lo + i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[b.lo_ - lo + i] += b.c_[i];
  *this = QPoly(den, lo, std::move(c));
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly& QPoly::operator*=(const QPoly& o) {
  if (is_zero() || o.is_zero()) return *this = QPoly();
  long den = std::lcm(den_, o.den_);
  QPoly a = with_denominator(den);
  QPoly b = o.with_denominator(den);
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  *this = QPoly(den, a.lo_ + b.lo_, std::move(c));
  return *this;
}

QPoly QPoly::pow(unsigned long k) const {
  QPoly result(Rational(1));
  QPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

QPoly QPoly::shifted(const Rational& shift) const {
  if (is_zero()) return *this;
  return *this * q_power(shift);
}

QPoly QPoly::substitute_inverse_q() const {
  if (is_zero()) return *this;
  std::vector<Rational> c(c_.rbegin(), c_.rend());
  return QPoly(den_, -(lo_ + static_cast<long>(c_.size()) - 1), std::move(c));
}

QPoly QPoly::scale_exponents(const Rational& factor) const {
  if (factor == 0) fail(ErrorKind::InvalidArgument, "zero exponent scale");
  QPoly r;
  for (const auto& [e, c] : terms()) r += monomial(c, e * factor);
  return r;
}

QPoly QPoly::divided_by(const QPoly& divisor) const {
  if (divisor.is_zero()) fail(ErrorKind::InexactDivision, "division by zero");
  if (is_zero()) return QPoly();
  if (divisor.is_monomial()) {
    Rational inv = 1 / divisor.c_[0];
    QPoly r = shifted(-divisor.min_exponent());
    for (auto& x : r.c_) x *= inv;
    return r;
  }
  long den = std::lcm(den_, divisor.den_);
  QPoly a = with_denominator(den);
  QPoly b = divisor.with_denominator(den);
  // Polynomial long division in w = q^(1/den) on the shifted supports.
  std::vector<Rational> rem = a.c_;
  const auto& dv = b.c_;
  if (rem.size() < dv.size()) fail(ErrorKind::InexactDivision, "divisor has larger span");
  size_t qn = rem.size() - dv.size() + 1;
  std::vector<Rational> quot(qn);
  Rational lead_inv = 1 / dv.back();
  for (size_t k = qn; k-- > 0;) {
    Rational t = rem[k + dv.size() - 1] * lead_inv;
    quot[k] = t;
    if (t == 0) continue;
    for (size_t j = 0; j < dv.size(); ++j) rem[k + j] -= t * dv[j];
  }
  for (const auto& x : rem) {
    if (x != 0) fail(ErrorKind::InexactDivision, to_string() + " is not divisible by " + divisor.to_string());
  }
  return QPoly(den, a.lo_ - b.lo_, std::move(quot));
}

std::complex<double> QPoly::eval(std::complex<double> q) const {
  if (is_zero()) return 0.0;
  std::complex<double> logq = std::log(q);
  std::complex<double> w = std::exp(logq / static_cast<double>(den_));
  std::complex<double> acc = 0.0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * w + c_[i].get_d();
  if (lo_ == 0) return acc;
  return acc * std::exp(logq * (static_cast<double>(lo_) / static_cast<double>(den_)));
}

std::string QPoly::to_string(bool explicit_mult) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? "-" : "+");
    }
    first = false;
    bool unit = (mag == 1);
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << (explicit_mult ? "*" : "");
    os << "q";
    if (e != 1) {
      if (is_integer(e) && e > 0) {
        os << "^" << e.get_str();
      } else {
        os << "^(" << e.get_str() << ")";
      }
    }
  }
  return os.str();
}

}  // namespace qalg
