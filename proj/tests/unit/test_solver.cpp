#include <doctest.h>

#include "helpers.hpp"

#include <qalg/errors.hpp>
#include <qalg/polygon.hpp>
#include <qalg/solver.hpp>
#include <qalg/transforms.hpp>
#include <qalg/unipoly.hpp>

#include <cmath>

using namespace qalg;
using namespace qalg::test;

namespace {

const cdouble kQ(1.37, 0.11);

SolveOptions opts() {
  SolveOptions o;
  o.q = kQ;
  return o;
}

}  // namespace

TEST_CASE("solved form detection") {
  CHECK(is_in_solved_form(fixture("qcatalan")));
  CHECK(is_in_solved_form(fixture("drake1")));
  CHECK_FALSE(is_in_solved_form(fixture("cfa")));
  CHECK_FALSE(is_in_solved_form(fixture("qpainleve1")));
  CHECK(has_nonshifting_part(fixture("qpainleve1")));
  CHECK_FALSE(has_nonshifting_part(eq("z*f(z) = 1 + z^2*f(q*z)")));
}

TEST_CASE("uniqueness condition") {
  QOperator p = step_translate_simplify(fixture("qpainleve1"), ex(1));
  // Nonshifting part -(q^-1 Y_-1 + Y_0 + q Y_1): the n-th coefficient is -q^(-m) (1 + q^m + q^(2m)), m = n + 1.
  UniquenessResult sym = uniqueness_condition(p, 30);
  CHECK(sym.holds);
  cdouble cube_root(-0.5, std::sqrt(3.0) / 2.0);
  UniquenessResult at = uniqueness_condition(p, 30, cube_root);
  CHECK_FALSE(at.holds);
  REQUIRE(at.first_violation);
  CHECK(*at.first_violation == 0);
  UniquenessResult two = uniqueness_condition(p, 30, cdouble(2.0));
  CHECK(two.holds);
  CHECK_THROWS_AS(uniqueness_condition(fixture("cfa"), 5), Error);
}

TEST_CASE("co-slopes from minus infinity follow the polygon") {
  CoslopeResult cs = next_coslopes(fixture("cfa"), std::nullopt, false, kQ, false);
  CHECK(cs.coslopes == std::vector<Rational>{R(-3, 2), R(1, 2), R(2)});
  CoslopeResult above = next_coslopes(fixture("cfa"), R(1, 2), false, kQ, false);
  CHECK(above.coslopes == std::vector<Rational>{R(2)});
}

TEST_CASE("q-Catalan has a single power series expansion") {
  SolveOptions o = opts();
  o.power_series_only = true;
  ExpansionNode tree = recursive_solve(fixture("qcatalan"), 4, R(0), true, o);
  std::vector<Expansion> all = initial_expansions(tree);
  REQUIRE(all.size() == 1);
  REQUIRE(all[0].terms.size() == 4);
  CHECK(all[0].terms[0].c == ex(1));
  CHECK(all[0].terms[1].c == ex(1));
  CHECK(all[0].terms[2].c == Coeff(qpoly({1, 1})));
  CHECK(all[0].terms[3].c == Coeff(qpoly({1, 2, 1, 1})));
  for (long k = 0; k < 4; ++k) CHECK(all[0].terms[k].mu == k);
}

TEST_CASE("q-Painleve I expansions") {
  ExpansionNode tree = recursive_solve(fixture("qpainleve1"), 2, R(0), true, opts());
  std::vector<Expansion> all = initial_expansions(tree);
  // Three nonzero constants (cube roots of unity) and the branch starting at z.
  CHECK(all.size() == 4);
  int exact_roots = 0;
  for (const auto& e : all) {
    REQUIRE(!e.terms.empty());
    if (e.terms[0].mu == 0 && e.terms[0].c.is_exact()) {
      CHECK(e.terms[0].c == ex(1));
      ++exact_roots;
    }
    if (e.terms[0].mu == 1) {
      CHECK(e.terms[0].c == ex(1));
      REQUIRE(e.terms.size() == 2);
      CHECK(e.terms[1].mu == 4);
      CHECK(e.terms[1].c == ex(1));
    }
  }
  CHECK(exact_roots == 1);
}

TEST_CASE("solved form of q-Painleve I for the branch through the origin") {
  std::vector<SolvedForm> forms = to_solved_form(fixture("qpainleve1"), 6, opts());
  bool found = false;
  for (const auto& sf : forms) {
    if (sf.prefix.size() == 1 && sf.prefix[0].is_exact() && sf.prefix[0].is_zero()) {
      CHECK(sf.op == eq("f(z) = z^3*f(z/q)*f(z)^2*f(q*z) + 1"));
      found = true;
    }
    if (sf.prefix.size() == 1 && sf.prefix[0] == ex(1)) {
      CHECK(sf.op.ring().is_exact());
      CHECK(is_in_solved_form(sf.op));
    }
  }
  CHECK(found);
}

TEST_CASE("a double root forces the derivative fallback") {
  std::vector<SolvedForm> forms = to_solved_form(eq("(f(z) - 1 - z)^2 = 0"), 4, opts());
  REQUIRE(!forms.empty());
  CHECK(forms[0].derivative_gammas == std::vector<int>{0});
}

TEST_CASE("fractional exponents need ramification first") {
  CHECK_THROWS_AS(to_solved_form(eq("f(z)^2 = z"), 3, opts()), Error);
  try {
    to_solved_form(eq("f(z)^2 = z"), 3, opts());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NeedsRamification);
  }
}

TEST_CASE("branches of the fractional-exponent example") {
  ExpansionNode tree = recursive_solve(fixture("sfexa"), 1, std::nullopt, false, opts());
  int at_zero = 0, at_half = 0;
  for (const auto& child : tree.children) {
    if (child.term->mu == 0) ++at_zero;
    if (child.term->mu == R(1, 2)) ++at_half;
  }
  CHECK(at_zero == 3);
  CHECK(at_half == 1);
}

TEST_CASE("pruning keeps the factors below the order") {
  QOperator p = eq("f(z) = 1 + z*f(z) + z^5*f(q*z)^2");
  QOperator cut = prune_above(p, R(0), R(3));
  CHECK(cut == eq("f(z) = 1 + z*f(z)"));
}

TEST_CASE("applying an operator to a truncated expansion") {
  std::vector<ExpansionTerm> terms{{ex(1), R(0)}, {ex(1), R(1)}, {Coeff(qpoly({1, 1})), R(2)}};
  auto res = apply_to_expansion(fixture("qcatalan"), terms, 0.7);
  for (const auto& [e, v] : res) {
    if (e <= 2) CHECK(std::abs(v) < 1e-14);
  }
}

TEST_CASE("lifting numeric roots to exact values") {
  UniPoly phi(Ring::exact());
  // (c - 2q^(1/2))(c + 1) = c^2 + (1 - 2q^(1/2)) c - 2q^(1/2)
  phi.add(R(2), ex(1));
  phi.add(R(1), Coeff(QPoly(R(1)) - QPoly::monomial(R(2), R(1, 2))));
  phi.add(R(0), qmono(-2, R(1, 2)));
  cdouble q = 1.7;
  auto lifted = lift_root(phi, 2.0 * std::sqrt(q), q);
  REQUIRE(lifted);
  CHECK(*lifted == QPoly::monomial(R(2), R(1, 2)));
  CHECK(*lift_root(phi, -1.0, q) == QPoly(R(-1)));
  UniPoly irr(Ring::exact());
  irr.add(R(2), ex(1));
  irr.add(R(0), ex(-2));
  CHECK_FALSE(lift_root(irr, std::sqrt(2.0), q));
}
