#pragma once

#include "qalg/qoperator.hpp"

namespace qalg {

// Operator of g where f = c z^mu + g.
QOperator translate(const QOperator& p, const Coeff& c, const Rational& mu);
// Operator of g where P(z g(z)) / z; needs a vanishing (0; empty) coefficient.
QOperator simplify_by_z(const QOperator& p);
// S_z T_c P; c must be a root of the constant term of P(c).
QOperator step_translate_simplify(const QOperator& p, const Coeff& c);

enum class Side { Left, Right };
// Right: (a; alpha) -> (a; alpha + k). Left additionally multiplies by q^(k a).
QOperator sigma_conjugate(const QOperator& p, int k, Side side);
// (a; alpha) -> (a; -alpha reversed). With substitute_inverse_q the result is the
// operator at 1/q: exact coefficients get q -> 1/q, numeric rings store 1/q.
QOperator reflect(const QOperator& p, bool substitute_inverse_q);
// (a; alpha) -> lambda^a (a; alpha).
QOperator scale_argument(const QOperator& p, const Coeff& lambda);
// Derivative with respect to Y_gamma.
QOperator derivative(const QOperator& p, int gamma);
// z -> z^p with q -> q^(1/p): (a; alpha) -> (p a; alpha) over the new variable.
QOperator ramify(const QOperator& p, long factor);

// Constant term of T_c P, i.e. [z^0] P(c, ..., c).
Coeff constant_after_translation(const QOperator& p, const Coeff& c);

}  // namespace qalg
