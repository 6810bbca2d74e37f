#pragma once

#include <utility>
#include <vector>

#include "qalg/qoperator.hpp"
#include "qalg/unipoly.hpp"

namespace qalg {

struct CloudPoint {
  Rational a;
  int ell = 0;

  friend bool operator==(const CloudPoint& x, const CloudPoint& y) { return x.a == y.a && x.ell == y.ell; }
  // Ordered by ordinate, then abscissa.
  friend bool operator<(const CloudPoint& x, const CloudPoint& y) {
    if (x.ell != y.ell) return x.ell < y.ell;
    return x.a < y.a;
  }
};

struct NewtonPolygon {
  std::vector<CloudPoint> vertices;  // increasing ordinate
  std::vector<Rational> coslopes;    // one per edge, strictly decreasing
};

// Sorted, duplicate-free set of (a, ell) over the support.
std::vector<CloudPoint> cloud(const QOperator& p);
std::vector<std::pair<QFactor, Coeff>> factors_at(const QOperator& p, const CloudPoint& pt);
std::vector<CloudPoint> leftmost_points(const std::vector<CloudPoint>& cloud);
// Input: one point per ordinate, ordinates increasing.
NewtonPolygon newton_puiseux_polygon(const std::vector<CloudPoint>& points);
NewtonPolygon newton_puiseux_polygon(const QOperator& p);
// Points minimizing a + mu * ell, ordered by ordinate.
std::vector<CloudPoint> points_at_coslope(const std::vector<CloudPoint>& cloud, const Rational& mu);
// Sum of P_A t^alpha(A) over the factors at pt.
UniPoly indicial_polynomial(const QOperator& p, const CloudPoint& pt);
// Sum over points (b, m) on the supporting line of co-slope mu of c^m times the
// indicial polynomial at (b, m) evaluated at q^mu.
UniPoly initial_polynomial(const QOperator& p, const Rational& mu);

}  // namespace qalg
