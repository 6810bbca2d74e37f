#include "qalg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qalg/errors.hpp"
#include "qalg/polygon.hpp"
#include "qalg/roots.hpp"
#include "qalg/transforms.hpp"

namespace qalg {

namespace {

cdouble evaluation_point(const QOperator& p, const std::optional<cdouble>& q) {
  if (!p.ring().is_exact()) return p.ring().q;
  if (!q) fail(ErrorKind::InvalidArgument, "a value of q is needed for this exact operator");
  return *q;
}

bool has_constant_part(const QOperator& p) {
  for (const auto& [f, c] : p.terms()) {
    if (f.is_constant()) return true;
  }
  return false;
}

bool same_coeff(const Coeff& a, const Coeff& b) {
  if (a.mode() != b.mode()) return false;
  if (a.is_exact()) return a == b;
  return std::abs(a.numeric() - b.numeric()) <= 1e-9 * (1.0 + std::abs(a.numeric()));
}

}  // namespace

bool has_nonshifting_part(const QOperator& p) {
  for (const auto& [f, c] : p.terms()) {
    if (f.a == 0 && f.ell() >= 1) return true;
  }
  return false;
}

bool is_in_solved_form(const QOperator& p) {
  bool linear_part = false;
  for (const auto& [f, c] : p.terms()) {
    if (!is_integer(f.a) || f.a < 0) return false;
    if (f.a == 0 && f.ell() >= 1) {
      if (f.ell() != 1) return false;
      linear_part = true;
    }
  }
  return linear_part;
}

UniquenessResult uniqueness_condition(const QOperator& p, long n_max, std::optional<cdouble> q) {
  if (!is_in_solved_form(p)) fail(ErrorKind::NotSolvedForm, "uniqueness condition needs a solved form");
  Decomposition d = decompose(p);
  UniquenessResult out;
  bool symbolic = p.ring().is_exact() && !q;
  cdouble qv = symbolic ? cdouble(0.0) : evaluation_point(p, q);
  double eps = 0.0;
  if (!symbolic) {
    double largest = 0.0;
    for (const auto& [f, c] : d.nonshifting.terms()) largest = std::max(largest, std::abs(c.eval(qv)));
    eps = 1e-12 * (1.0 + largest);
  }
  for (long n = 0; n <= n_max; ++n) {
    bool zero;
    if (symbolic) {
      QPoly s;
      for (const auto& [f, c] : d.nonshifting.terms()) s += c.exact().shifted(Rational(f.alphas[0]) * n);
      zero = s.is_zero();
    } else {
      cdouble s = 0.0;
      double scale = 0.0;
      for (const auto& [f, c] : d.nonshifting.terms()) {
        cdouble t = c.eval(qv) * complex_q_pow(qv, Rational(f.alphas[0]) * n);
        s += t;
        scale += std::abs(t);
      }
      zero = std::abs(s) <= std::max(eps, 1e-12 * scale);
    }
    if (zero) {
      out.holds = false;
      out.first_violation = n;
      return out;
    }
  }
  return out;
}

CoslopeResult next_coslopes(const QOperator& p, const std::optional<Rational>& mu_min, bool flag_equal,
                            std::optional<cdouble> q, bool strict) {
  if (p.empty()) fail(ErrorKind::EmptyInput, "co-slopes of the zero operator");
  CoslopeResult out;
  NewtonPolygon poly = newton_puiseux_polygon(p);
  auto above = [&](const Rational& mu) {
    if (!mu_min) return true;
    return flag_equal ? mu >= *mu_min : mu > *mu_min;
  };
  for (const auto& mu : poly.coslopes) {
    if (above(mu)) out.coslopes.push_back(mu);
  }
  std::optional<cdouble> qv;
  double eps = p.zero_threshold();
  for (size_t i = 0; i < poly.vertices.size(); ++i) {
    std::optional<Rational> upper, lower;
    if (i > 0) upper = poly.coslopes[i - 1];
    if (i < poly.coslopes.size()) lower = poly.coslopes[i];
    if (mu_min && upper && (flag_equal ? *upper < *mu_min : *upper <= *mu_min)) continue;
    UniPoly psi = indicial_polynomial(p, poly.vertices[i]);
    if (!qv) qv = evaluation_point(p, q);
    std::vector<cdouble> dense;
    bool vanished = psi.is_zero();
    if (!vanished) {
      dense = psi.numeric_dense(*qv);
      double m = 0.0;
      for (auto x : dense) m = std::max(m, std::abs(x));
      vanished = m <= eps;
    }
    std::ostringstream where;
    where << "(" << poly.vertices[i].a.get_str() << "," << poly.vertices[i].ell << ")";
    if (vanished) {
      if (strict) fail(ErrorKind::InfinitelyMany, "indicial polynomial at " + where.str() + " vanishes");
      out.infinitely_many = true;
      out.diagnostics.push_back("indicial polynomial vanishes at " + where.str());
      continue;
    }
    RootSet rs = nonzero_roots(dense);
    cdouble logq = std::log(*qv);
    if (std::abs(logq) < 1e-14) fail(ErrorKind::InvalidArgument, "q = 1 gives no logarithm");
    for (auto r : rs.roots) {
      cdouble lam = std::log(r) / logq;
      if (std::fabs(lam.imag()) > 1e-9 * (1.0 + std::abs(lam))) continue;
      double x = lam.real();
      Rational mu = rationalize(x, 1000);
      if (std::fabs(x - mu.get_d()) > 1e-9 * (1.0 + std::fabs(x))) {
        std::ostringstream os;
        os << "indicial root at " << where.str() << " gives irrational exponent " << x;
        out.diagnostics.push_back(os.str());
        continue;
      }
      if (upper && !(mu < *upper)) continue;
      if (lower && !(mu > *lower)) continue;
      if (!above(mu)) continue;
      out.coslopes.push_back(mu);
    }
  }
  std::sort(out.coslopes.begin(), out.coslopes.end());
  out.coslopes.erase(std::unique(out.coslopes.begin(), out.coslopes.end()), out.coslopes.end());
  return out;
}

QOperator prune_above(const QOperator& p, const Rational& mu, const Rational& order) {
  QOperator out(p.ring());
  for (const auto& [f, c] : p.terms()) {
    if (f.a + mu * f.ell() <= order) out.add(f, c);
  }
  return out;
}

std::optional<QPoly> lift_root(const UniPoly& phi, cdouble root, cdouble q) {
  if (phi.is_zero() || !phi.ring().is_exact()) return std::nullopt;
  long den = 1;
  for (const auto& [e, c] : phi.terms()) den = std::lcm(den, c.exact().denominator());
  long span = to_long(phi.degree() - phi.order());
  if (span == 1) {
    // Linear: the root is an exact quotient when it exists.
    try {
      Coeff r = (-phi.coefficient(phi.order())).divided_by(phi.coefficient(phi.degree()));
      if (std::abs(r.eval(q) - root) <= 1e-8 * (1.0 + std::abs(root))) return r.exact();
    } catch (const Error&) {
    }
  }
  long d = den * std::max(1L, span);
  std::vector<Rational> betas;
  for (long k = 0; k <= 12 * d; ++k) {
    betas.push_back(make_rational(k, d));
    if (k) betas.push_back(make_rational(-k, d));
  }
  for (const auto& beta : betas) {
    cdouble rho = root / complex_q_pow(q, beta);
    // Multiple roots are only accurate to about sqrt(eps); the exact check below decides.
    if (std::fabs(rho.imag()) > 1e-6 * (1.0 + std::abs(rho))) continue;
    Rational r = rationalize(rho.real(), 1000);
    if (r == 0 || std::fabs(r.get_d() - rho.real()) > 1e-6 * (1.0 + std::abs(rho))) continue;
    QPoly cand = QPoly::monomial(r, beta);
    if (phi.eval_exact(cand).is_zero()) return cand;
  }
  return std::nullopt;
}

ExpansionNode recursive_solve(const QOperator& p, int depth, const std::optional<Rational>& mu_min,
                              bool flag_equal, const SolveOptions& options) {
  ExpansionNode node;
  node.mu = mu_min;
  node.op = p;
  if (p.empty() || depth <= 0) {
    node.status = NodeStatus::Leaf;
    return node;
  }
  CoslopeResult cs = next_coslopes(p, mu_min, flag_equal, options.q, options.strict_infinitely_many);
  node.diagnostics = cs.diagnostics;
  std::vector<Rational> mus;
  for (const auto& mu : cs.coslopes) {
    if (options.power_series_only && (!is_integer(mu) || mu < 0)) continue;
    mus.push_back(mu);
  }
  if (mus.empty()) {
    node.status = has_constant_part(p) ? NodeStatus::DeadEnd : NodeStatus::Leaf;
    return node;
  }
  cdouble qv = evaluation_point(p, options.q);
  for (const auto& mu : mus) {
    UniPoly phi = initial_polynomial(p, mu);
    if (phi.is_zero()) continue;
    RootSet rs = nonzero_roots(phi.numeric_dense(qv), options.tol);
    for (size_t i = 0; i < rs.roots.size(); ++i) {
      Coeff c;
      QOperator base = p;
      std::optional<QPoly> lifted;
      if (p.ring().is_exact() && options.lift_exact_roots) lifted = lift_root(phi, rs.roots[i], qv);
      if (lifted) {
        c = Coeff(*lifted);
      } else {
        base = to_numeric(p, qv);
        c = Coeff(rs.roots[i]);
      }
      QOperator t = translate(base, c, mu);
      if (options.prune_order) t = prune_above(t, mu, *options.prune_order);
      ExpansionNode child = recursive_solve(t, depth - 1, mu, false, options);
      child.term = ExpansionTerm{c, mu};
      child.multiplicity = rs.multiplicities[i];
      node.children.push_back(std::move(child));
    }
  }
  if (node.children.empty()) {
    node.status = has_constant_part(p) ? NodeStatus::DeadEnd : NodeStatus::Leaf;
  }
  return node;
}

namespace {

void collect(const ExpansionNode& node, std::vector<ExpansionTerm>& path, std::vector<Expansion>& out) {
  if (node.term) path.push_back(*node.term);
  if (node.children.empty()) {
    out.push_back(Expansion{path, node.status != NodeStatus::DeadEnd});
  } else {
    for (const auto& child : node.children) collect(child, path, out);
  }
  if (node.term) path.pop_back();
}

}  // namespace

std::vector<Expansion> initial_expansions(const ExpansionNode& tree) {
  std::vector<Expansion> out;
  std::vector<ExpansionTerm> path;
  collect(tree, path, out);
  return out;
}

namespace {

// Replays S_z T_{f_j} along the power-series coefficients of an expansion and
// stops at the first solved form.
std::optional<SolvedForm> replay(const QOperator& p, const Expansion& e, cdouble qv) {
  if (e.terms.empty()) return std::nullopt;
  long last = to_long(e.terms.back().mu);
  std::vector<std::optional<Coeff>> coeffs(static_cast<size_t>(last + 1));
  for (const auto& t : e.terms) coeffs[to_long(t.mu)] = t.c;
  QOperator q = p;
  SolvedForm sf;
  for (long j = 0; j <= last; ++j) {
    Coeff c = coeffs[j] ? *coeffs[j] : q.ring().zero();
    if (q.ring().is_exact() && !c.is_exact()) q = to_numeric(q, qv);
    c = q.ring().convert(c);
    q = step_translate_simplify(q, c);
    sf.prefix.push_back(c);
    if (is_in_solved_form(q)) {
      sf.op = q;
      return sf;
    }
  }
  return std::nullopt;
}

std::vector<SolvedForm> attempt(const QOperator& p, int max_steps, const SolveOptions& options,
                                const std::vector<int>& gammas) {
  std::vector<SolvedForm> out;
  if (is_in_solved_form(p)) {
    out.push_back(SolvedForm{{}, p, gammas});
    return out;
  }
  cdouble qv = evaluation_point(p, options.q);
  CoslopeResult cs = next_coslopes(p, Rational(0), true, options.q, options.strict_infinitely_many);
  bool integral = false;
  for (const auto& mu : cs.coslopes) integral = integral || is_integer(mu);
  if (!cs.coslopes.empty() && !integral) {
    fail(ErrorKind::NeedsRamification, "only non-integer exponents are possible; ramify z first");
  }
  SolveOptions opt = options;
  opt.power_series_only = true;
  ExpansionNode tree = recursive_solve(p, max_steps, Rational(0), true, opt);
  for (const auto& e : initial_expansions(tree)) {
    std::optional<SolvedForm> sf;
    try {
      sf = replay(p, e, qv);
    } catch (const Error&) {
      continue;
    }
    if (!sf) continue;
    sf->derivative_gammas = gammas;
    bool dup = false;
    for (const auto& prev : out) {
      if (prev.prefix.size() != sf->prefix.size()) continue;
      bool same = true;
      for (size_t i = 0; i < prev.prefix.size() && same; ++i) same = same_coeff(prev.prefix[i], sf->prefix[i]);
      dup = dup || same;
    }
    if (!dup) out.push_back(std::move(*sf));
  }
  return out;
}

}  // namespace

std::vector<SolvedForm> to_solved_form(const QOperator& p, int max_steps, const SolveOptions& options) {
  std::vector<SolvedForm> out = attempt(p, max_steps, options, {});
  if (!out.empty()) return out;
  // A pivot of ordinate m >= 2 blocks the replay; differentiate m - 1 times there.
  QOperator cur = p;
  std::vector<int> gammas;
  int budget = std::max(0, p.length() - 1);
  while (out.empty() && budget > 0) {
    CoslopeResult cs = next_coslopes(cur, Rational(0), true, options.q, options.strict_infinitely_many);
    Rational mu(0);
    for (const auto& m : cs.coslopes) {
      if (is_integer(m)) {
        mu = m;
        break;
      }
    }
    std::vector<CloudPoint> line = points_at_coslope(cloud(cur), mu);
    const CloudPoint& top = line.back();
    if (top.ell < 2) break;
    auto facs = factors_at(cur, top);
    const QFactor& f = facs.front().first;
    for (int i = 0; i < top.ell - 1 && budget > 0; ++i, --budget) {
      cur = derivative(cur, f.alphas[i]);
      gammas.push_back(f.alphas[i]);
    }
    if (cur.empty()) break;
    out = attempt(cur, max_steps, options, gammas);
  }
  if (out.empty()) fail(ErrorKind::NotSolvedForm, "no expansion reached a solved form");
  return out;
}

std::map<Rational, cdouble> apply_to_expansion(const QOperator& p, const std::vector<ExpansionTerm>& terms,
                                               cdouble q) {
  using Series = std::map<Rational, cdouble>;
  auto mul = [](const Series& a, const Series& b) {
    Series r;
    for (const auto& [ea, ca] : a) {
      for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
    }
    return r;
  };
  std::map<int, Series> shifted;
  auto shifted_series = [&](int alpha) -> const Series& {
    auto it = shifted.find(alpha);
    if (it != shifted.end()) return it->second;
    Series s;
    for (const auto& t : terms) s[t.mu] += t.c.eval(q) * complex_q_pow(q, t.mu * alpha);
    return shifted.emplace(alpha, std::move(s)).first->second;
  };
  Series out;
  for (const auto& [f, c] : p.terms()) {
    Series prod{{Rational(0), c.eval(q)}};
    for (int a : f.alphas) prod = mul(prod, shifted_series(a));
    for (const auto& [e, v] : prod) out[e + f.a] += v;
  }
  return out;
}

}  // namespace qalg
