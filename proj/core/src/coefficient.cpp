#include "qalg/coefficient.hpp"

#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

const QPoly& Coeff::exact() const {
  if (!is_exact()) fail(ErrorKind::ModeError, "expected an exact coefficient");
  return std::get<QPoly>(v_);
}

cdouble Coeff::numeric() const {
  if (is_exact()) fail(ErrorKind::ModeError, "expected a numeric coefficient");
  return std::get<cdouble>(v_);
}

bool Coeff::is_zero() const {
  if (is_exact()) return std::get<QPoly>(v_).is_zero();
  return std::get<cdouble>(v_) == 0.0;
}

bool Coeff::is_negligible(double eps) const {
  if (is_exact()) return std::get<QPoly>(v_).is_zero();
  return std::abs(std::get<cdouble>(v_)) <= eps;
}

double Coeff::magnitude(cdouble q) const { return std::abs(eval(q)); }

cdouble Coeff::eval(cdouble q) const {
  if (is_exact()) return std::get<QPoly>(v_).eval(q);
  return std::get<cdouble>(v_);
}

void Coeff::check_mode(const Coeff& o) const {
  if (v_.index() != o.v_.index()) fail(ErrorKind::ModeError, "mixing exact and numeric coefficients");
}

Coeff Coeff::operator-() const {
  if (is_exact()) return Coeff(-std::get<QPoly>(v_));
  return Coeff(-std::get<cdouble>(v_));
}

Coeff& Coeff::operator+=(const Coeff& o) {
  check_mode(o);
  if (is_exact()) {
    std::get<QPoly>(v_) += std::get<QPoly>(o.v_);
  } else {
    std::get<cdouble>(v_) += std::get<cdouble>(o.v_);
  }
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  check_mode(o);
  if (is_exact()) {
    std::get<QPoly>(v_) -= std::get<QPoly>(o.v_);
  } else {
    std::get<cdouble>(v_) -= std::get<cdouble>(o.v_);
  }
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  check_mode(o);
  if (is_exact()) {
    std::get<QPoly>(v_) *= std::get<QPoly>(o.v_);
  } else {
    std::get<cdouble>(v_) *= std::get<cdouble>(o.v_);
  }
  return *this;
}

Coeff Coeff::divided_by(const Coeff& o) const {
  check_mode(o);
  if (is_exact()) return Coeff(std::get<QPoly>(v_).divided_by(std::get<QPoly>(o.v_)));
  cdouble d = std::get<cdouble>(o.v_);
  if (d == 0.0) fail(ErrorKind::InexactDivision, "numeric division by zero");
  return Coeff(std::get<cdouble>(v_) / d);
}

Coeff Coeff::pow(unsigned long k) const {
  if (is_exact()) return Coeff(std::get<QPoly>(v_).pow(k));
  cdouble r = 1.0, b = std::get<cdouble>(v_);
  while (k > 0) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return Coeff(r);
}

std::string Coeff::to_string() const {
  if (is_exact()) return std::get<QPoly>(v_).to_string();
  cdouble z = std::get<cdouble>(v_);
  std::ostringstream os;
  os.precision(17);
  if (z.imag() == 0.0) {
    os << z.real();
  } else {
    os << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
  }
  return os.str();
}

cdouble complex_q_pow(cdouble q, const Rational& e) {
  if (is_integer(e) && e.get_num().fits_slong_p()) {
    long k = e.get_num().get_si();
    cdouble base = k < 0 ? 1.0 / q : q;
    unsigned long n = static_cast<unsigned long>(k < 0 ? -k : k);
    cdouble r = 1.0;
    while (n > 0) {
      if (n & 1) r *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return r;
  }
  return std::exp(std::log(q) * e.get_d());
}

Coeff Ring::zero() const { return is_exact() ? Coeff(QPoly()) : Coeff(cdouble(0.0)); }

Coeff Ring::one() const { return from_rational(1); }

Coeff Ring::from_rational(const Rational& r) const {
  return is_exact() ? Coeff(QPoly(r)) : Coeff(cdouble(r.get_d()));
}

Coeff Ring::from_complex(cdouble z) const {
  if (is_exact()) fail(ErrorKind::ModeError, "complex value in an exact ring");
  return Coeff(z);
}

Coeff Ring::q_pow(const Rational& e) const {
  return is_exact() ? Coeff(QPoly::q_power(e)) : Coeff(complex_q_pow(q, e));
}

Coeff Ring::convert(const Coeff& c) const {
  if (c.mode() == mode) return c;
  if (is_exact()) fail(ErrorKind::ModeError, "cannot convert a numeric coefficient to exact");
  return Coeff(c.eval(q));
}

}  // namespace qalg
