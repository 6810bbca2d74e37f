#include "qalg/polygon.hpp"

#include <algorithm>
#include <set>

#include "qalg/errors.hpp"

namespace qalg {

std::vector<CloudPoint> cloud(const QOperator& p) {
  std::set<CloudPoint> pts;
  for (const auto& [f, c] : p.terms()) pts.insert(CloudPoint{f.a, f.ell()});
  return {pts.begin(), pts.end()};
}

std::vector<std::pair<QFactor, Coeff>> factors_at(const QOperator& p, const CloudPoint& pt) {
  std::vector<std::pair<QFactor, Coeff>> out;
  for (const auto& [f, c] : p.terms()) {
    if (f.a == pt.a && f.ell() == pt.ell) out.emplace_back(f, c);
  }
  return out;
}

std::vector<CloudPoint> leftmost_points(const std::vector<CloudPoint>& pts) {
  std::vector<CloudPoint> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  std::vector<CloudPoint> out;
  for (const auto& pt : sorted) {
    if (out.empty() || out.back().ell != pt.ell) out.push_back(pt);
  }
  return out;
}

NewtonPolygon newton_puiseux_polygon(const std::vector<CloudPoint>& points) {
  if (points.empty()) fail(ErrorKind::EmptyInput, "polygon of an empty cloud");
  for (size_t i = 1; i < points.size(); ++i) {
    if (points[i].ell <= points[i - 1].ell) {
      fail(ErrorKind::InvalidArgument, "points must have strictly increasing ordinates");
    }
  }
  NewtonPolygon poly;
  size_t cur = 0;
  poly.vertices.push_back(points[0]);
  while (cur + 1 < points.size()) {
    // The maximization restarts at every vertex; ties go to the higher point.
    size_t best = cur + 1;
    Rational best_mu = (points[cur].a - points[best].a) / Rational(points[best].ell - points[cur].ell);
    for (size_t j = cur + 2; j < points.size(); ++j) {
      Rational mu = (points[cur].a - points[j].a) / Rational(points[j].ell - points[cur].ell);
      if (mu >= best_mu) {
        best_mu = mu;
        best = j;
      }
    }
    poly.vertices.push_back(points[best]);
    poly.coslopes.push_back(best_mu);
    cur = best;
  }
  return poly;
}

NewtonPolygon newton_puiseux_polygon(const QOperator& p) {
  return newton_puiseux_polygon(leftmost_points(cloud(p)));
}

std::vector<CloudPoint> points_at_coslope(const std::vector<CloudPoint>& pts, const Rational& mu) {
  if (pts.empty()) fail(ErrorKind::EmptyInput, "supporting line of an empty cloud");
  Rational best = pts[0].a + mu * pts[0].ell;
  for (const auto& pt : pts) best = std::min(best, Rational(pt.a + mu * pt.ell));
  std::vector<CloudPoint> out;
  for (const auto& pt : pts) {
    if (pt.a + mu * pt.ell == best) out.push_back(pt);
  }
  std::sort(out.begin(), out.end());
  return out;
}

UniPoly indicial_polynomial(const QOperator& p, const CloudPoint& pt) {
  UniPoly out(p.ring());
  for (const auto& [f, c] : factors_at(p, pt)) out.add(Rational(f.alpha_sum()), c);
  return out;
}

UniPoly initial_polynomial(const QOperator& p, const Rational& mu) {
  UniPoly out(p.ring());
  for (const auto& pt : points_at_coslope(cloud(p), mu)) {
    for (const auto& [f, c] : factors_at(p, pt)) {
      out.add(Rational(pt.ell), c * p.ring().q_pow(mu * f.alpha_sum()));
    }
  }
  return out;
}

}  // namespace qalg
