#include "qalg/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qalg/solver.hpp"
#include "qalg/transforms.hpp"

namespace qalg {

namespace {

using cld = std::complex<long double>;

Decomposition shifting_decomposition(const QOperator& p) {
  Decomposition d = decompose(p);
  if (d.shifting.empty()) fail(ErrorKind::NoShiftingPart, "operator has no shifting factor");
  return d;
}

struct CrestData {
  Height height;
  QOperator op;
  Coeff unit;  // coefficient of (0;0)
};

CrestData crest_data(const QOperator& p) {
  Decomposition d = shifting_decomposition(p);
  if (d.nonshifting.max_alpha() != 0) fail(ErrorKind::NotNormalized, "crest needs max alpha of P0 = 0");
  QFactor unit(Rational(0), {0});
  Coeff u = p.coefficient(unit);
  if (u.is_zero()) fail(ErrorKind::NotNormalized, "crest needs a (0;0) factor");
  Height ht = height_coheight(p);
  QOperator op(p.ring());
  op.add(unit, u);
  for (const auto& [f, c] : d.shifting.terms()) {
    if (Rational(f.alphas.back()) == ht.H * f.a) op.add(f, c);
  }
  return CrestData{ht, op, u};
}

int scope_of(const QFactor& f) {
  int s = 0;
  for (int a : f.alphas) s += (a == f.alphas.back());
  return s;
}

cld wide_q_pow(cdouble q, const Rational& e) {
  cld lq = std::log(cld(q.real(), q.imag()));
  return std::exp(lq * static_cast<long double>(e.get_d()));
}

}  // namespace

Height height_coheight(const QOperator& p) {
  Decomposition d = shifting_decomposition(p);
  std::optional<Rational> H, h;
  for (const auto& [f, c] : d.shifting.terms()) {
    Rational r = Rational(f.alphas.back()) / f.a;
    if (!H || r > *H) {
      H = r;
      h = f.a;
    } else if (r == *H && f.a < *h) {
      h = f.a;
    }
  }
  return Height{*H, *h, true};
}

CrestReport crest(const QOperator& p, const Coeff& f0_in, std::optional<cdouble> q) {
  CrestData cd = crest_data(p);
  const Ring& ring = p.ring();
  Coeff f0 = ring.convert(f0_in);
  CrestReport out{cd.height.H, cd.height.h, cd.op, {}, UniPoly(ring), std::nullopt, std::nullopt, std::nullopt};
  for (const auto& [f, c] : cd.op.terms()) {
    int s = scope_of(f);
    out.scope.emplace_back(f, s);
    Coeff term = c * ring.from_rational(s) * f0.pow(static_cast<unsigned long>(f.ell() - 1));
    Rational e = -cd.height.H * f.a * (f.a - cd.height.h) / 2;
    if (e != 0) term *= ring.q_pow(e);
    out.crest_poly.add(f.a, term);
  }
  std::optional<cdouble> qv = ring.is_exact() ? q : std::optional<cdouble>(ring.q);
  if (qv) {
    std::vector<cdouble> dense = out.crest_poly.numeric_dense(*qv);
    out.roots = complex_roots(dense);
    out.smallest = smallest_modulus_root(dense);
    out.R = std::abs(out.smallest->root);
  }
  return out;
}

bool crest_is_linear(const QOperator& p) {
  CrestData cd = crest_data(p);
  for (const auto& [f, c] : cd.op.terms()) {
    if (f.ell() != 1) return false;
  }
  return true;
}

BorelTransform crest_borel(const SeriesCoeffs& f, const Rational& H, const Rational& h) {
  if (f.ring.is_exact()) fail(ErrorKind::ModeError, "crest transform needs numeric coefficients");
  BorelTransform out;
  std::vector<cld> g;
  for (size_t n = 0; n < f.size(); ++n) {
    Rational e = -H * Rational(static_cast<long>(n)) * (Rational(static_cast<long>(n)) - h) / 2;
    cld v = f.wide_at(n) * wide_q_pow(f.ring.q, e);
    g.push_back(v);
    out.g.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  }
  std::vector<double> ratios;
  size_t start = g.size() - g.size() / 4;
  for (size_t n = std::max<size_t>(start, 1); n + 1 < g.size(); ++n) {
    if (std::abs(g[n + 1]) > 0 && std::abs(g[n]) > 0) {
      ratios.push_back(static_cast<double>(std::abs(g[n]) / std::abs(g[n + 1])));
    }
  }
  if (!ratios.empty()) {
    std::sort(ratios.begin(), ratios.end());
    out.radius = ratios[ratios.size() / 2];
  }
  return out;
}

EdgeReport edge_elevation(const QOperator& p, std::optional<cdouble> q) {
  Decomposition d = shifting_decomposition(p);
  if (d.nonshifting.min_alpha() != 0) fail(ErrorKind::NotNormalized, "edge needs min alpha of P0 = 0");
  std::optional<Rational> E;
  for (const auto& [f, c] : d.shifting.terms()) {
    Rational r = Rational(f.alphas.front()) / f.a;
    if (!E || r < *E) E = r;
  }
  const Ring& ring = p.ring();
  EdgeReport out{*E, QOperator(ring), UniPoly(ring), 0.0};
  QFactor unit(Rational(0), {0});
  if (!p.coefficient(unit).is_zero()) out.edge.add(unit, p.coefficient(unit));
  for (const auto& [f, c] : d.shifting.terms()) {
    if (Rational(f.alphas.front()) == *E * f.a) out.edge.add(f, c);
  }
  for (const auto& [f, c] : out.edge.terms()) {
    Rational e = -*E * f.a * f.a / 2;
    out.edge_poly.add(f.a, e == 0 ? c : c * ring.q_pow(e));
  }
  std::optional<cdouble> qv = ring.is_exact() ? q : std::optional<cdouble>(ring.q);
  if (qv && std::fabs(std::log(std::abs(*qv))) > 1e-12) {
    std::map<Rational, double> mags;
    for (const auto& [f, c] : p.terms()) {
      if (f.a >= 1) mags[f.a] += std::abs(c.eval(*qv));
    }
    if (!mags.empty()) {
      const auto& [a, m] = *mags.rbegin();
      double ad = a.get_d();
      out.coefficient_gevrey_order = std::max(0.0, 2.0 * std::log(m) / (ad * ad * std::log(std::abs(*qv))));
    }
  }
  return out;
}

DepthReport depth_codepth(const QOperator& p) {
  Decomposition d = shifting_decomposition(p);
  auto pmin = d.nonshifting.min_alpha();
  auto smin = d.shifting.min_alpha();
  if (pmin != 0 || !smin || *smin < 0) fail(ErrorKind::NotNormalized, "depth needs min alpha(P0) = 0 <= min alpha(P+)");
  auto rank = [](const Depth& x) { return x.kind == Depth::Kind::Zero ? 0 : x.kind == Depth::Kind::Finite ? 1 : 2; };
  std::optional<Depth> best;
  std::vector<QFactor> minimizers;
  for (const auto& [f, c] : d.shifting.terms()) {
    Depth dep = depth_root(f.alphas);
    bool better = !best || rank(dep) < rank(*best) ||
                  (rank(dep) == rank(*best) && dep.kind == Depth::Kind::Finite && dep.value < best->value - 1e-12);
    bool tie = best && rank(dep) == rank(*best) &&
               (dep.kind != Depth::Kind::Finite || std::fabs(dep.value - best->value) <= 1e-12);
    if (better) {
      best = dep;
      minimizers = {f};
    } else if (tie) {
      minimizers.push_back(f);
    }
  }
  DepthReport out{*best, std::nullopt};
  for (const auto& f : minimizers) {
    if (f.ell() < 2) continue;
    double cd = f.a.get_d() / (f.ell() - 1);
    if (!out.d || cd > *out.d) out.d = cd;
  }
  return out;
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Analytic: return "Analytic";
    case Regime::Entire: return "Entire";
    case Regime::Divergent: return "Divergent";
    case Regime::Balanced: return "Balanced";
    case Regime::Other: return "Other";
  }
  return "Other";
}

RegimeReport classify_regime(const QOperator& p, cdouble q) {
  if (!is_in_solved_form(p)) fail(ErrorKind::NotSolvedForm, "regime needs a solved form");
  RegimeReport out;
  out.normalized = p;
  Decomposition d = decompose(p);
  double mod = std::abs(q);
  if (d.shifting.empty() || std::fabs(mod - 1.0) < 1e-12) {
    out.growth = "no classification";
    return out;
  }
  std::ostringstream growth;
  if (mod < 1.0) {
    out.shift = -*d.nonshifting.min_alpha();
    out.normalized = sigma_conjugate(p, out.shift, Side::Right);
    int smin = *decompose(out.normalized).shifting.min_alpha();
    if (smin == 0) {
      out.regime = Regime::Analytic;
      growth << "f_n = O(c^-n) for some c > 0";
    } else if (smin > 0) {
      out.regime = Regime::Entire;
      out.depth = depth_codepth(out.normalized);
      growth << "|f_n| decays at least like |q|^(D n log n + O(n))";
      if (out.depth->D.kind == Depth::Kind::Finite) growth << " with D = " << out.depth->D.value;
    } else {
      out.regime = Regime::Divergent;
      out.height = height_coheight(reflect(out.normalized, true));
      growth << "divergent after reflection to 1/q: f_n ~ |q|^(-H n (n - h) / 2) R^-n with H = "
             << out.height->H.get_str() << ", h = " << out.height->h.get_str();
    }
  } else {
    out.shift = -*d.nonshifting.max_alpha();
    out.normalized = sigma_conjugate(p, out.shift, Side::Right);
    int smax = *decompose(out.normalized).shifting.max_alpha();
    if (smax > 0) {
      out.regime = Regime::Divergent;
      out.height = height_coheight(out.normalized);
      growth << "f_n ~ q^(H n (n - h) / 2) R^-n with H = " << out.height->H.get_str()
             << ", h = " << out.height->h.get_str();
    } else if (smax == 0) {
      out.regime = Regime::Balanced;
      growth << "convergent: f_n = O(c^-n) for some c > 0";
    } else {
      out.regime = Regime::Entire;
      growth << "entire after reflection to 1/q";
    }
  }
  out.growth = growth.str();
  return out;
}

LinearizeResult linearize_crest(const QOperator& p, int max_steps) {
  if (!is_in_solved_form(p)) fail(ErrorKind::NotSolvedForm, "crest linearization needs a solved form");
  LinearizeResult out;
  out.op = p;
  out.heights.push_back(height_coheight(p).H);
  while (!crest_is_linear(out.op)) {
    if (out.steps >= max_steps) {
      std::ostringstream os;
      os << "crest still nonlinear after " << max_steps << " steps; heights";
      for (const auto& h : out.heights) os << " " << h.get_str();
      throw MaxStepsError(os.str(), out.heights);
    }
    Decomposition d = decompose(out.op);
    Coeff denom = out.op.ring().zero();
    for (const auto& [f, c] : d.nonshifting.terms()) denom += c;
    Coeff k = d.constant.coefficient(QFactor(Rational(0), {}));
    if (denom.is_negligible(out.op.zero_threshold())) fail(ErrorKind::UniquenessViolated, "f_0 is not determined");
    Coeff f0 = (-k).divided_by(denom);
    out.op = step_translate_simplify(out.op, f0);
    out.prefix.push_back(f0);
    ++out.steps;
    out.heights.push_back(height_coheight(out.op).H);
  }
  return out;
}

DivergentReport divergent_estimate(const QOperator& p_in, const SeriesCoeffs& f) {
  if (f.ring.is_exact()) fail(ErrorKind::ModeError, "estimates need numeric coefficients");
  cdouble q = f.ring.q;
  QOperator p = to_numeric(p_in, q);
  RegimeReport reg = classify_regime(p, q);
  if (reg.regime != Regime::Divergent || std::abs(q) <= 1.0) {
    fail(ErrorKind::NotDivergentRegime, "operator is " + regime_name(reg.regime) + " at this q");
  }
  const QOperator& pn = reg.normalized;
  // g(z) = f(q^-shift z) solves the normalized equation.
  std::vector<cld> g;
  for (size_t n = 0; n < f.size(); ++n) {
    g.push_back(f.wide_at(n) * wide_q_pow(q, Rational(-reg.shift * static_cast<long>(n))));
  }
  cdouble g0(static_cast<double>(g[0].real()), static_cast<double>(g[0].imag()));
  CrestReport cr = crest(pn, Coeff(g0));
  DivergentReport out;
  out.H = cr.H;
  out.h = cr.h;
  out.R = *cr.R;
  std::vector<std::pair<QFactor, Coeff>> shifting;
  for (const auto& [fac, c] : cr.crest.terms()) {
    if (fac.a != 0) shifting.emplace_back(fac, c);
  }
  out.generic = shifting.size() == 1 && cr.smallest->unique_at_modulus && cr.smallest->multiplicity == 1;
  cld log_kappa;
  if (out.generic) {
    const auto& [fac, c] = shifting.front();
    out.period = static_cast<int>(to_long(fac.a));
    Coeff k = cr.crest_poly.coefficient(fac.a);
    cdouble kappa = -k.numeric() / cr.crest_poly.coefficient(Rational(0)).numeric();
    log_kappa = std::log(cld(kappa.real(), kappa.imag())) / static_cast<long double>(out.period);
  } else {
    out.period = static_cast<int>(to_long(cr.h));
    log_kappa = -std::log(static_cast<long double>(out.R));
  }
  size_t n_total = g.size();
  if (n_total < static_cast<size_t>(4 * out.period)) fail(ErrorKind::InvalidArgument, "too few coefficients");
  std::vector<cld> r(n_total);
  for (size_t n = 0; n < n_total; ++n) {
    Rational e = -cr.H * Rational(static_cast<long>(n)) * (Rational(static_cast<long>(n)) - cr.h) / 2;
    r[n] = g[n] * wide_q_pow(q, e) * std::exp(-static_cast<long double>(n) * log_kappa);
    out.normalized.emplace_back(static_cast<double>(r[n].real()), static_cast<double>(r[n].imag()));
  }
  size_t start = n_total - n_total / 4;
  for (int m = 0; m < out.period; ++m) {
    std::vector<cld> tail;
    for (size_t n = 1; n < n_total; ++n) {
      if (static_cast<int>(n % out.period) == m && n >= start) tail.push_back(r[n]);
    }
    if (tail.size() < 2) {
      tail.clear();
      for (size_t n = n_total; n-- > 1 && tail.size() < 2;) {
        if (static_cast<int>(n % out.period) == m) tail.insert(tail.begin(), r[n]);
      }
    }
    ResidueClass rc;
    rc.residue = m;
    cld sum = 0;
    for (const auto& x : tail) sum += x;
    cld mean = sum / static_cast<long double>(tail.size());
    rc.estimate = cdouble(static_cast<double>(mean.real()), static_cast<double>(mean.imag()));
    for (size_t i = 1; i < tail.size(); ++i) {
      rc.spread = std::max(rc.spread, static_cast<double>(std::abs(tail[i] - tail[i - 1])));
    }
    rc.last_difference = tail.size() >= 2 ? static_cast<double>(std::abs(tail.back() - tail[tail.size() - 2])) : 0.0;
    out.classes.push_back(rc);
  }
  return out;
}

}  // namespace qalg
