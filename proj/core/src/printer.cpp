#include "qalg/printer.hpp"

#include <sstream>

namespace qalg {

namespace {

std::string power_suffix(const Rational& e) {
  if (e == 1) return "";
  if (is_integer(e) && e > 0) return "^" + e.get_str();
  return "^(" + e.get_str() + ")";
}

std::string sigma_arg(int k) {
  if (k == 0) return "z";
  if (k == 1) return "q*z";
  if (k > 1) return "q^" + std::to_string(k) + "*z";
  if (k == -1) return "z/q";
  return "z/q^" + std::to_string(-k);
}

// Coefficient text and whether it carries a leading minus sign that was split off.
std::pair<std::string, bool> coeff_text(const Coeff& c) {
  if (c.is_exact()) {
    const QPoly& p = c.exact();
    bool neg = p.is_monomial() && p.terms().front().second < 0;
    QPoly mag = neg ? -p : p;
    if (mag == QPoly(Rational(1))) return {"", neg};
    std::string s = mag.to_string(true);
    if (!mag.is_monomial()) s = "(" + s + ")";
    return {s, neg};
  }
  cdouble z = c.numeric();
  std::ostringstream os;
  os.precision(17);
  if (z == cdouble(1.0)) return {"", false};
  if (z == cdouble(-1.0)) return {"", true};
  if (z.imag() == 0.0) {
    if (z.real() < 0) return {(os << -z.real(), os.str()), true};
    os << z.real();
  } else {
    os << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "*i)";
  }
  return {os.str(), false};
}

template <class Monomial>
std::string render(const QOperator& p, Monomial monomial) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, c] : p.terms()) {
    auto [ct, neg] = coeff_text(c);
    std::vector<std::string> parts;
    if (!ct.empty()) parts.push_back(ct);
    for (auto& m : monomial(f)) parts.push_back(m);
    if (parts.empty()) parts.push_back("1");
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
  }
  return os.str();
}

}  // namespace

std::string to_equation_string(const QOperator& p) {
  return render(p, [](const QFactor& f) {
           std::vector<std::string> out;
           if (f.a != 0) out.push_back("z" + power_suffix(f.a));
           for (size_t i = 0; i < f.alphas.size();) {
             size_t j = i;
             while (j < f.alphas.size() && f.alphas[j] == f.alphas[i]) ++j;
             std::string s = "f(" + sigma_arg(f.alphas[i]) + ")";
             if (j - i > 1) s += "^" + std::to_string(j - i);
             out.push_back(s);
             i = j;
           }
           return out;
         }) +
         " = 0";
}

std::string to_y_notation(const QOperator& p) {
  return render(p, [](const QFactor& f) {
    std::vector<std::string> out;
    if (f.a != 0) out.push_back("z" + power_suffix(f.a));
    for (size_t i = 0; i < f.alphas.size();) {
      size_t j = i;
      while (j < f.alphas.size() && f.alphas[j] == f.alphas[i]) ++j;
      std::string s = "Y_" + std::to_string(f.alphas[i]);
      if (j - i > 1) s += "^" + std::to_string(j - i);
      out.push_back(s);
      i = j;
    }
    return out;
  });
}

}  // namespace qalg
