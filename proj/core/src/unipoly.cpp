#include "qalg/unipoly.hpp"

#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

void UniPoly::add(const Rational& exponent, const Coeff& c) {
  if (c.mode() != ring_.mode) fail(ErrorKind::ModeError, "coefficient mode differs from polynomial mode");
  if (c.is_zero()) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Coeff UniPoly::coefficient(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? ring_.zero() : it->second;
}

Rational UniPoly::degree() const {
  if (is_zero()) fail(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  return terms_.rbegin()->first;
}

Rational UniPoly::order() const {
  if (is_zero()) fail(ErrorKind::ZeroPolynomial, "order of the zero polynomial");
  return terms_.begin()->first;
}

cdouble UniPoly::eval(cdouble x) const {
  cdouble s = 0.0;
  for (const auto& [e, c] : terms_) s += c.eval(ring_.q) * complex_q_pow(x, e);
  return s;
}

QPoly UniPoly::eval_exact(const QPoly& x) const {
  QPoly s;
  for (const auto& [e, c] : terms_) {
    long k = to_long(e);
    if (k < 0) fail(ErrorKind::InvalidArgument, "exact evaluation needs nonnegative exponents");
    s += c.exact() * x.pow(static_cast<unsigned long>(k));
  }
  return s;
}

std::vector<cdouble> UniPoly::numeric_dense(cdouble q) const {
  if (is_zero()) fail(ErrorKind::ZeroPolynomial, "dense form of the zero polynomial");
  long lo = to_long(order());
  long hi = to_long(degree());
  std::vector<cdouble> out(static_cast<size_t>(hi - lo + 1), 0.0);
  for (const auto& [e, c] : terms_) out[to_long(e) - lo] = c.eval(q);
  return out;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (e != 0) os << "*" << var << (e == 1 ? "" : "^" + e.get_str());
  }
  return os.str();
}

}  // namespace qalg
