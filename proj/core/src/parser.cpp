#include "qalg/parser.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

namespace {

struct Token {
  enum class Kind { Int, Ident, Symbol, End } kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (ch == '#' ) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    int l = line, c = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::Int, src.substr(i, j - i), l, c});
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      out.push_back({Token::Kind::Ident, std::string(1, ch), l, c});
      advance(1);
    } else if (std::string("+-*/^()=").find(ch) != std::string::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, ch), l, c});
      advance(1);
    } else {
      std::ostringstream os;
      os << "unexpected character '" << ch << "' at line " << l << ", column " << c;
      fail(ErrorKind::SyntaxError, os.str());
    }
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, Ring ring) : toks_(std::move(toks)), ring_(ring) {}

  QOperator equation() {
    QOperator lhs = expr();
    if (accept("=")) {
      QOperator rhs = expr();
      lhs -= rhs;
    }
    if (peek().kind != Token::Kind::End) error("unexpected '" + peek().text + "'");
    return lhs;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is(const std::string& s) const { return peek().kind == Token::Kind::Symbol && peek().text == s; }
  bool is_ident(const std::string& s) const { return peek().kind == Token::Kind::Ident && peek().text == s; }
  bool accept(const std::string& s) {
    if (!is(s)) return false;
    ++pos_;
    return true;
  }
  void expect(const std::string& s) {
    if (!accept(s)) error("expected '" + s + "'");
  }
  [[noreturn]] void error(const std::string& msg) const {
    std::ostringstream os;
    os << msg << " at line " << peek().line << ", column " << peek().col;
    fail(ErrorKind::SyntaxError, os.str());
  }

  QOperator constant(const Coeff& c) const {
    QOperator p(ring_);
    p.add(QFactor(Rational(0), {}), c);
    return p;
  }

  QOperator expr() {
    bool neg = accept("-");
    QOperator acc = term();
    if (neg) acc = -acc;
    while (is("+") || is("-")) {
      bool minus = is("-");
      ++pos_;
      QOperator t = term();
      if (minus) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

  QOperator term() {
    QOperator acc = factor();
    while (accept("*")) acc = acc * factor();
    return acc;
  }

  long integer() {
    if (peek().kind != Token::Kind::Int) error("expected an integer");
    mpz_class z(peek().text);
    if (!z.fits_slong_p()) error("integer too large");
    ++pos_;
    return z.get_si();
  }

  Rational rational() {
    if (peek().kind != Token::Kind::Int) error("expected a number");
    mpz_class num(peek().text);
    ++pos_;
    mpz_class den(1);
    if (is("/") && toks_[pos_ + 1].kind == Token::Kind::Int) {
      ++pos_;
      den = mpz_class(peek().text);
      ++pos_;
      if (den == 0) error("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  Rational exponent() {
    if (accept("(")) {
      bool neg = accept("-");
      Rational r = rational();
      expect(")");
      return neg ? Rational(-r) : r;
    }
    return rational();
  }

  enum class BaseKind { Number, Q, Z, I, Other };

  QOperator power(const QOperator& base, BaseKind kind, const Rational& numeric_base, const Rational& e) {
    switch (kind) {
      case BaseKind::Q:
        return constant(ring_.q_pow(e));
      case BaseKind::Z: {
        QOperator p(ring_);
        p.add(QFactor(e, {}), ring_.one());
        return p;
      }
      case BaseKind::Number: {
        if (!is_integer(e)) error("number raised to a non-integer power");
        long k = to_long(e);
        if (numeric_base == 0 && k < 0) error("zero raised to a negative power");
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), numeric_base.get_num_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
        mpz_pow_ui(r.get_den_mpz_t(), numeric_base.get_den_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
        r.canonicalize();
        if (k < 0) r = 1 / r;
        return constant(ring_.from_rational(r));
      }
      case BaseKind::I:
      case BaseKind::Other: {
        if (!is_integer(e) || e < 0) error("only nonnegative integer powers are allowed here");
        long k = to_long(e);
        QOperator acc = constant(ring_.one());
        for (long j = 0; j < k; ++j) acc = acc * base;
        return acc;
      }
    }
    return base;
  }

  QOperator factor() {
    BaseKind kind = BaseKind::Other;
    Rational num(0);
    QOperator base(ring_);
    if (peek().kind == Token::Kind::Int) {
      num = rational();
      kind = BaseKind::Number;
      base = constant(ring_.from_rational(num));
    } else if (is_ident("q")) {
      ++pos_;
      kind = BaseKind::Q;
      base = constant(ring_.q_pow(Rational(1)));
    } else if (is_ident("z")) {
      ++pos_;
      kind = BaseKind::Z;
      base.add(QFactor(Rational(1), {}), ring_.one());
    } else if (is_ident("i")) {
      if (ring_.is_exact()) error("'i' needs numeric mode");
      ++pos_;
      kind = BaseKind::I;
      base = constant(ring_.from_complex(cdouble(0.0, 1.0)));
    } else if (is_ident("f")) {
      ++pos_;
      expect("(");
      int k = sigma_index();
      expect(")");
      base.add(QFactor(Rational(0), {k}), ring_.one());
    } else if (accept("(")) {
      base = expr();
      expect(")");
    } else {
      error(peek().kind == Token::Kind::End ? "unexpected end of input" : "unexpected '" + peek().text + "'");
    }
    if (accept("^")) return power(base, kind, num, exponent());
    return base;
  }

  int to_sigma(const Rational& e) const {
    if (!is_integer(e)) fail(ErrorKind::NonIntegerSigmaIndex, "shift q^" + e.get_str() + " is not an integer power");
    return static_cast<int>(to_long(e));
  }

  // q^k*z, q*z, z, z/q, z/q^k
  int sigma_index() {
    if (is_ident("q")) {
      ++pos_;
      Rational e(1);
      if (accept("^")) e = exponent();
      expect("*");
      if (!is_ident("z")) error("expected 'z'");
      ++pos_;
      return to_sigma(e);
    }
    if (!is_ident("z")) error("expected 'z' or 'q'");
    ++pos_;
    if (accept("/")) {
      if (!is_ident("q")) error("expected 'q'");
      ++pos_;
      Rational e(1);
      if (accept("^")) e = exponent();
      return -to_sigma(e);
    }
    return 0;
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  Ring ring_;
};

}  // namespace

EquationSource parse_equation(const std::string& text, Ring ring) {
  Parser parser(tokenize(text), ring);
  EquationSource src{text, parser.equation(), 1, ring.mode};
  if (ring.is_exact()) {
    for (const auto& [f, c] : src.parsed.terms()) src.q_denominator = std::lcm(src.q_denominator, c.exact().denominator());
  }
  return src;
}

EquationSource load_equation_file(const std::string& path, Ring ring) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_equation(os.str(), ring);
}

}  // namespace qalg
