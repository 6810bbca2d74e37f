#include <CLI11.hpp>
#include <json.hpp>

#include <qalg/asymptotics.hpp>
#include <qalg/errors.hpp>
#include <qalg/parser.hpp>
#include <qalg/polygon.hpp>
#include <qalg/printer.hpp>
#include <qalg/series.hpp>
#include <qalg/solver.hpp>
#include <qalg/transforms.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace qalg;

namespace {

struct Globals {
  bool json = false;
  std::string out;
  double tol = 1e-12;
};

cdouble parse_complex(const std::string& text) {
  static const std::regex pattern(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$)");
  std::smatch m;
  if (text.empty() || !std::regex_match(text, m, pattern)) {
    fail(ErrorKind::InvalidArgument, "cannot read complex number '" + text + "'");
  }
  double re = m[1].matched ? std::stod(m[1].str()) : 0.0;
  double im = 0.0;
  if (m[2].matched) {
    im = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (m[2].str() == "-") im = -im;
  } else if (!m[1].matched) {
    fail(ErrorKind::InvalidArgument, "cannot read complex number '" + text + "'");
  }
  return {re, im};
}

Rational parse_rational(const std::string& text) {
  try {
    Rational r(text);
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidArgument, "cannot read rational number '" + text + "'");
  }
}


json complex_json(cdouble z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json rational_json(const Rational& r) { return json::array({r.get_num().get_si(), r.get_den().get_si()}); }

json coeff_json(const Coeff& c) {
  if (c.is_exact()) return c.to_string();
  return complex_json(c.numeric());
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream os(g.out);
  if (!os) fail(ErrorKind::InvalidArgument, "cannot write " + g.out);
  os << text;
  if (!text.empty() && text.back() != '\n') os << '\n';
}

QOperator load(const std::string& path) { return load_equation_file(path).parsed; }

// Polygon.

int cmd_polygon(const Globals& g, const std::string& file) {
  NewtonPolygon poly = newton_puiseux_polygon(load(file));
  if (g.json) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : poly.vertices) {
      j["vertices"].push_back({v.a.get_num().get_si(), v.a.get_den().get_si(), v.ell});
    }
    j["coslopes"] = json::array();
    for (const auto& c : poly.coslopes) j["coslopes"].push_back(rational_json(c));
    emit(g, j.dump());
    return 0;
  }
  std::ostringstream os;
  os << "vertices:";
  for (const auto& v : poly.vertices) os << " (" << to_string(v.a) << "," << v.ell << ")";
  os << "\ncoslopes:";
  for (const auto& c : poly.coslopes) os << " " << to_string(c);
  os << "\n";
  emit(g, os.str());
  return 0;
}

// Expansions.

std::string expansion_string(const Expansion& e) {
  std::ostringstream os;
  if (e.terms.empty()) os << "0";
  for (size_t i = 0; i < e.terms.size(); ++i) {
    if (i) os << " + ";
    os << "(" << e.terms[i].c.to_string() << ")*z^" << to_string(e.terms[i].mu);
  }
  return os.str();
}

int cmd_expansions(const Globals& g, const std::string& file, int terms, const std::string& min_coslope,
                   bool power_series, const std::string& prune, const std::string& qtext) {
  QOperator p = load(file);
  SolveOptions opt;
  opt.tol = g.tol;
  opt.power_series_only = power_series;
  if (!qtext.empty()) opt.q = parse_complex(qtext);
  if (!prune.empty()) opt.prune_order = parse_rational(prune);
  std::optional<Rational> mu_min;
  if (!min_coslope.empty()) mu_min = parse_rational(min_coslope);
  ExpansionNode tree = recursive_solve(p, terms, mu_min, mu_min.has_value(), opt);
  std::vector<Expansion> all = initial_expansions(tree);
  if (g.json) {
    json j = json::array();
    for (const auto& e : all) {
      json terms_json = json::array();
      for (const auto& t : e.terms) terms_json.push_back({{"c", coeff_json(t.c)}, {"mu", rational_json(t.mu)}});
      j.push_back({{"terms", terms_json}, {"complete", e.complete}});
    }
    emit(g, j.dump());
    return 0;
  }
  std::ostringstream os;
  for (const auto& e : all) os << expansion_string(e) << (e.complete ? "" : "   [dead end]") << "\n";
  emit(g, os.str());
  return 0;
}

// Solved form.

int cmd_solved_form(const Globals& g, const std::string& file, int max_steps, const std::string& qtext) {
  QOperator p = load(file);
  SolveOptions opt;
  opt.tol = g.tol;
  if (!qtext.empty()) opt.q = parse_complex(qtext);
  std::vector<SolvedForm> forms = to_solved_form(p, max_steps, opt);
  if (g.json) {
    json j = json::array();
    for (const auto& sf : forms) {
      json prefix = json::array();
      for (const auto& c : sf.prefix) prefix.push_back(coeff_json(c));
      j.push_back({{"prefix", prefix}, {"derivatives", sf.derivative_gammas}, {"equation", to_equation_string(sf.op)}});
    }
    emit(g, j.dump());
    return 0;
  }
  std::ostringstream os;
  for (const auto& sf : forms) {
    os << "prefix:";
    for (const auto& c : sf.prefix) os << " " << c.to_string();
    if (!sf.derivative_gammas.empty()) {
      os << "  derivatives:";
      for (int d : sf.derivative_gammas) os << " " << d;
    }
    os << "\n  " << to_equation_string(sf.op) << "\n";
  }
  emit(g, os.str());
  return 0;
}

// Coefficients.

std::optional<Coeff> parse_f0(const std::string& text, const Ring& ring) {
  if (text.empty()) return std::nullopt;
  if (ring.is_exact()) return ring.from_rational(parse_rational(text));
  return Coeff(parse_complex(text));
}

int cmd_coeffs(const Globals& g, const std::string& file, long n, const std::string& qtext, bool exact,
               const std::string& f0text) {
  if (exact == !qtext.empty()) fail(ErrorKind::InvalidArgument, "give exactly one of --q and --exact");
  QOperator p = load(file);
  if (!exact) p = to_numeric(p, parse_complex(qtext));
  SeriesCoeffs f = solve_coefficients(p, n, parse_f0(f0text, p.ring()));
  if (g.json) {
    json j = json::array();
    for (size_t i = 0; i < f.size(); ++i) {
      if (exact) {
        j.push_back({{"n", i}, {"value", f.coeffs[i].to_string()}});
      } else {
        auto w = f.wide_at(i);
        j.push_back({{"n", i}, {"re", static_cast<double>(w.real())}, {"im", static_cast<double>(w.imag())}});
      }
    }
    emit(g, j.dump());
    return 0;
  }
  std::ostringstream os;
  os.precision(17);
  os << (exact ? "n,poly\n" : "n,re,im\n");
  for (size_t i = 0; i < f.size(); ++i) {
    if (exact) {
      os << i << "," << f.coeffs[i].to_string() << "\n";
    } else {
      auto w = f.wide_at(i);
      // Long double keeps values beyond the double range readable.
      os << i << "," << w.real() + 0.0L << "," << w.imag() + 0.0L << "\n";
    }
  }
  emit(g, os.str());
  return 0;
}

// Invariants.

template <class F>
json guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return json{{"error", error_name(e.kind())}};
  }
}

int cmd_invariants(const Globals& g, const std::string& file, const std::string& qtext, long n) {
  QOperator p = load(file);
  std::optional<cdouble> q;
  if (!qtext.empty()) q = parse_complex(qtext);
  json j;
  j["equation"] = to_equation_string(p);
  j["alpha"] = guarded([&] {
    AlphaStats s = alpha_stats(p);
    auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
    return json{{"nonshifting_max", opt(s.nonshifting_max)},
                {"nonshifting_min", opt(s.nonshifting_min)},
                {"shifting_max", opt(s.shifting_max)},
                {"shifting_min", opt(s.shifting_min)}};
  });
  j["generic_order"] = guarded([&] { return json(generic_order(p, n)); });
  j["generic_degree"] = guarded([&] { return json(generic_degree(p, n)); });
  j["height"] = guarded([&] {
    Height h = height_coheight(p);
    return json{{"H", to_string(h.H)}, {"h", to_string(h.h)}};
  });
  j["depth"] = guarded([&] {
    DepthReport d = depth_codepth(p);
    json out;
    switch (d.D.kind) {
      case Depth::Kind::Zero: out["D"] = 0; break;
      case Depth::Kind::Infinite: out["D"] = "inf"; break;
      case Depth::Kind::Finite: out["D"] = d.D.value; break;
    }
    out["d"] = d.d ? json(*d.d) : json(nullptr);
    return out;
  });
  j["elevation"] = guarded([&] {
    EdgeReport e = edge_elevation(p, q);
    return json{{"E", to_string(e.E)},
                {"edge", to_equation_string(e.edge)},
                {"edge_poly", e.edge_poly.to_string("z")},
                {"coefficient_gevrey_order", e.coefficient_gevrey_order}};
  });
  if (g.json) {
    emit(g, j.dump());
  } else {
    emit(g, j.dump(2));
  }
  return 0;
}

// Crest.

json crest_json(const CrestReport& c) {
  json j{{"H", to_string(c.H)}, {"h", to_string(c.h)}, {"crest", to_equation_string(c.crest)},
         {"crest_poly", c.crest_poly.to_string("z")}};
  json scope = json::array();
  for (const auto& [f, s] : c.scope) scope.push_back({{"factor", f.to_string()}, {"scope", s}});
  j["scope"] = scope;
  if (c.roots) {
    json roots = json::array();
    for (size_t i = 0; i < c.roots->roots.size(); ++i) {
      roots.push_back({{"root", complex_json(c.roots->roots[i])}, {"multiplicity", c.roots->multiplicities[i]}});
    }
    j["roots"] = roots;
  }
  if (c.R) j["R"] = *c.R;
  if (c.smallest) j["smallest_unique"] = c.smallest->unique_at_modulus && c.smallest->multiplicity == 1;
  return j;
}

int cmd_crest(const Globals& g, const std::string& file, const std::string& qtext, const std::string& f0text) {
  QOperator p = load(file);
  cdouble q = parse_complex(qtext);
  Coeff f0 = p.ring().one();
  if (!f0text.empty()) {
    f0 = *parse_f0(f0text, p.ring());
  } else if (p.ring().is_exact()) {
    // Default to the coefficient the recursion would produce.
    SeriesCoeffs f = solve_coefficients(p, 0);
    f0 = f.coeffs[0];
  }
  CrestReport c = crest(p, f0, q);
  json j = crest_json(c);
  emit(g, g.json ? j.dump() : j.dump(2));
  return 0;
}

// Asymptotics.

int cmd_asymptotics(const Globals& g, const std::string& file, const std::string& qtext, long n, bool linearize,
                    const std::string& csv) {
  QOperator p = load(file);
  cdouble q = parse_complex(qtext);
  json j;
  if (linearize) {
    LinearizeResult lr = linearize_crest(p, 16);
    json prefix = json::array();
    for (const auto& c : lr.prefix) prefix.push_back(coeff_json(c));
    json heights = json::array();
    for (const auto& h : lr.heights) heights.push_back(to_string(h));
    j["linearize"] = {{"steps", lr.steps}, {"prefix", prefix}, {"heights", heights},
                      {"equation", to_equation_string(lr.op)}};
    p = lr.op;
  }
  RegimeReport reg = classify_regime(p, q);
  j["regime"] = regime_name(reg.regime);
  j["shift"] = reg.shift;
  j["growth"] = reg.growth;
  if (reg.height) j["height"] = {{"H", to_string(reg.height->H)}, {"h", to_string(reg.height->h)}};
  SeriesCoeffs f = solve_coefficients(to_numeric(p, q), n);
  std::ostringstream plot;
  plot.precision(17);
  plot << "n,normalized_value_re,normalized_value_im,residue_class\n";
  if (reg.regime == Regime::Divergent) {
    DivergentReport d = divergent_estimate(p, f);
    j["H"] = to_string(d.H);
    j["h"] = to_string(d.h);
    j["R"] = d.R;
    j["period"] = d.period;
    j["generic"] = d.generic;
    json classes = json::array();
    for (const auto& c : d.classes) {
      classes.push_back({{"residue", c.residue},
                         {"estimate", complex_json(c.estimate)},
                         {"spread", c.spread},
                         {"last_difference", c.last_difference}});
    }
    j["classes"] = classes;
    for (size_t i = 0; i < d.normalized.size(); ++i) {
      plot << i << "," << d.normalized[i].real() << "," << d.normalized[i].imag() << "," << i % d.period << "\n";
    }
  } else {
    // Geometric growth: report the tail ratio and its inverse.
    json ratios = json::array();
    for (long k = std::max<long>(1, n - 3); k <= n; ++k) {
      auto a = f.wide_at(k - 1), b = f.wide_at(k);
      if (std::abs(a) == 0.0L) continue;
      auto r = b / a;
      ratios.push_back(complex_json(cdouble(static_cast<double>(r.real()), static_cast<double>(r.imag()))));
    }
    j["tail_ratios"] = ratios;
    if (!ratios.empty()) {
      double re = ratios.back()[0], im = ratios.back()[1];
      double mod = std::hypot(re, im);
      if (mod > 0) j["radius_estimate"] = 1.0 / mod;
    }
    for (size_t i = 0; i < f.size(); ++i) {
      auto w = f.wide_at(i);
      plot << i << "," << static_cast<double>(w.real()) << "," << static_cast<double>(w.imag()) << ",0\n";
    }
  }
  if (!csv.empty()) {
    std::ofstream os(csv);
    if (!os) fail(ErrorKind::InvalidArgument, "cannot write " + csv);
    os << plot.str();
  }
  emit(g, g.json ? j.dump() : j.dump(2));
  return 0;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::NonIntegerSigmaIndex:
      return 2;
    case ErrorKind::NoConvergence:
    case ErrorKind::DivergentProduct:
      return 4;
    default:
      return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-algebraic equation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--out", g.out, "write output to a file");
  app.add_option("--tol", g.tol, "numeric tolerance");

  std::string file, qtext, f0text, min_coslope, prune, csv;
  long n = 20;
  int terms = 3, max_steps = 8;
  bool exact = false, power_series = false, linearize = false;

  auto* polygon = app.add_subcommand("polygon", "Newton-Puiseux polygon");
  polygon->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* expansions = app.add_subcommand("expansions", "initial terms of the solutions");
  expansions->add_option("file", file)->required()->check(CLI::ExistingFile);
  expansions->add_option("--terms", terms, "number of terms");
  expansions->add_option("--min-coslope", min_coslope, "exponents must exceed this value");
  expansions->add_flag("--power-series", power_series, "only nonnegative integer exponents");
  expansions->add_option("--prune", prune, "drop factors above this order");
  expansions->add_option("--q", qtext, "value of q used for root finding");

  auto* solved = app.add_subcommand("solved-form", "bring the equation to solved form");
  solved->add_option("file", file)->required()->check(CLI::ExistingFile);
  solved->add_option("--max-steps", max_steps, "expansion depth");
  solved->add_option("--q", qtext, "value of q used for root finding");

  auto* coeffs = app.add_subcommand("coeffs", "power series coefficients");
  coeffs->add_option("file", file)->required()->check(CLI::ExistingFile);
  coeffs->add_option("--n", n, "last index")->required();
  coeffs->add_option("--q", qtext, "numeric value of q");
  coeffs->add_flag("--exact", exact, "coefficients as polynomials in q");
  coeffs->add_option("--f0", f0text, "initial value when it is not determined");

  auto* invariants = app.add_subcommand("invariants", "generic order and degree, height, depth, elevation");
  invariants->add_option("file", file)->required()->check(CLI::ExistingFile);
  invariants->add_option("--q", qtext, "value of q");
  invariants->add_option("--n", n, "length of the generic order and degree tables");

  auto* crest_cmd = app.add_subcommand("crest", "crest and crest polynomial");
  crest_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
  crest_cmd->add_option("--q", qtext, "value of q")->required();
  crest_cmd->add_option("--f0", f0text, "value of f(0)");

  auto* asym = app.add_subcommand("asymptotics", "regime and growth constants");
  asym->add_option("file", file)->required()->check(CLI::ExistingFile);
  asym->add_option("--q", qtext, "value of q")->required();
  asym->add_option("--n", n, "number of coefficients")->required();
  asym->add_flag("--linearize", linearize, "linearize the crest first");
  asym->add_option("--csv", csv, "write normalized coefficients as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*polygon) return cmd_polygon(g, file);
    if (*expansions) return cmd_expansions(g, file, terms, min_coslope, power_series, prune, qtext);
    if (*solved) return cmd_solved_form(g, file, max_steps, qtext);
    if (*coeffs) return cmd_coeffs(g, file, n, qtext, exact, f0text);
    if (*invariants) return cmd_invariants(g, file, qtext, n);
    if (*crest_cmd) return cmd_crest(g, file, qtext, f0text);
    if (*asym) return cmd_asymptotics(g, file, qtext, n, linearize, csv);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
