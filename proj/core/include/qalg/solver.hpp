#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qalg/qoperator.hpp"
#include "qalg/unipoly.hpp"

namespace qalg {

bool has_nonshifting_part(const QOperator& p);
// Integer z-exponents and a nonzero, linear part at a = 0.
bool is_in_solved_form(const QOperator& p);

struct UniquenessResult {
  bool holds = true;
  std::optional<long> first_violation;
};

// Checks sum_{A in P0} P_A q^(alpha_1 n) != 0 for 0 <= n <= n_max. Exact operators
// are checked symbolically unless q is given; numeric ones against the zero threshold.
UniquenessResult uniqueness_condition(const QOperator& p, long n_max, std::optional<cdouble> q = std::nullopt);

struct CoslopeResult {
  std::vector<Rational> coslopes;
  bool infinitely_many = false;           // some relevant indicial polynomial vanished
  std::vector<std::string> diagnostics;  // skipped candidates
};

// Candidate exponents above mu_min (or equal to it with flag_equal). No mu_min means
// minus infinity. q is needed for exact operators; numeric ones use their own q.
CoslopeResult next_coslopes(const QOperator& p, const std::optional<Rational>& mu_min, bool flag_equal,
                            std::optional<cdouble> q = std::nullopt, bool strict = false);

struct ExpansionTerm {
  Coeff c;
  Rational mu;
};

enum class NodeStatus { Open, Leaf, DeadEnd };

struct ExpansionNode {
  std::optional<Rational> mu;  // none at the root started from minus infinity
  QOperator op;
  std::optional<ExpansionTerm> term;
  int multiplicity = 1;
  std::vector<ExpansionNode> children;
  NodeStatus status = NodeStatus::Open;
  std::vector<std::string> diagnostics;
};

struct SolveOptions {
  std::optional<cdouble> q;  // evaluation point for exact operators
  bool power_series_only = false;
  std::optional<Rational> prune_order;
  bool strict_infinitely_many = false;
  double tol = 1e-12;
  // Try to express numeric roots of exact initial polynomials as r q^b.
  bool lift_exact_roots = true;
};

ExpansionNode recursive_solve(const QOperator& p, int depth, const std::optional<Rational>& mu_min,
                              bool flag_equal, const SolveOptions& options);

struct Expansion {
  std::vector<ExpansionTerm> terms;
  bool complete = true;
};

std::vector<Expansion> initial_expansions(const ExpansionNode& tree);

struct SolvedForm {
  std::vector<Coeff> prefix;       // f_0, ..., f_{k-1} consumed before the solved form
  QOperator op;                    // operator for g with f = prefix + z^k g
  std::vector<int> derivative_gammas;  // derivatives applied to the input first
};

std::vector<SolvedForm> to_solved_form(const QOperator& p, int max_steps, const SolveOptions& options);

// Operator restricted to factors with a + mu ell <= order.
QOperator prune_above(const QOperator& p, const Rational& mu, const Rational& order);

// P applied to a finite Puiseux sum, as exponent -> value at the given q.
std::map<Rational, cdouble> apply_to_expansion(const QOperator& p, const std::vector<ExpansionTerm>& terms,
                                               cdouble q);

// Tries c = r q^b with small-denominator rational r; returns an exact root of phi or none.
std::optional<QPoly> lift_root(const UniPoly& phi, cdouble root, cdouble q);

}  // namespace qalg
