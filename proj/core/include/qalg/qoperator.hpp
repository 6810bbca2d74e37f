#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qalg/coefficient.hpp"
#include "qalg/rational.hpp"

namespace qalg {

// (a; alphas) acts on f as z^a * prod f(q^alpha_i z). Alphas are kept sorted.
struct QFactor {
  Rational a;
  std::vector<int> alphas;

  QFactor() = default;
  QFactor(Rational a_, std::vector<int> alphas_);

  int ell() const { return static_cast<int>(alphas.size()); }
  long alpha_sum() const;
  bool is_constant() const { return alphas.empty(); }
  std::string to_string() const;

  friend bool operator==(const QFactor& x, const QFactor& y) { return x.a == y.a && x.alphas == y.alphas; }
  friend bool operator<(const QFactor& x, const QFactor& y);
};

// Finite sum of q-factors with coefficients in one ring.
class QOperator {
 public:
  using Terms = std::map<QFactor, Coeff>;

  explicit QOperator(Ring ring = Ring::exact()) : ring_(ring) {}

  const Ring& ring() const { return ring_; }
  Mode mode() const { return ring_.mode; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  // Adds c to the coefficient of f, dropping it if the result is zero.
  void add(const QFactor& f, const Coeff& c);
  Coeff coefficient(const QFactor& f) const;

  // Numeric operators drop coefficients below 1e-12 * (1 + max |c|).
  void prune();
  double zero_threshold() const;
  double max_magnitude() const;

  int length() const;
  std::optional<int> max_alpha() const;
  std::optional<int> min_alpha() const;
  std::optional<Rational> max_a() const;

  QOperator operator-() const;
  QOperator& operator+=(const QOperator& o);
  QOperator& operator-=(const QOperator& o);
  friend QOperator operator+(QOperator a, const QOperator& b) { return a += b; }
  friend QOperator operator-(QOperator a, const QOperator& b) { return a -= b; }
  // Product of q-factors: exponents add and alpha lists merge.
  friend QOperator operator*(const QOperator& a, const QOperator& b);
  QOperator scaled(const Coeff& c) const;

  friend bool operator==(const QOperator& a, const QOperator& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check_ring(const QOperator& o) const;
  Ring ring_;
  Terms terms_;
};

QOperator make_operator(Ring ring, std::initializer_list<std::pair<QFactor, Coeff>> terms);

// Evaluates every exact coefficient at q.
QOperator to_numeric(const QOperator& p, cdouble q);

// Same support and coefficients within rel_tol * (1 + max |c|).
bool approx_equal(const QOperator& a, const QOperator& b, double rel_tol);

struct Decomposition {
  QOperator nonshifting;
  QOperator shifting;
  QOperator constant;
};

// Requires nonnegative integer z-exponents.
Decomposition decompose(const QOperator& p);

struct AlphaStats {
  std::optional<int> nonshifting_max;
  std::optional<int> nonshifting_min;
  std::optional<int> shifting_max;
  std::optional<int> shifting_min;
  std::optional<Rational> max_a;
};

AlphaStats alpha_stats(const QOperator& p);

}  // namespace qalg
