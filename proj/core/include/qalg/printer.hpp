#pragma once

#include <string>

#include "qalg/qoperator.hpp"

namespace qalg {

// "expr = 0" style text in the equation syntax; exact operators reparse to themselves.
std::string to_equation_string(const QOperator& p);

// Y notation, e.g. "Y_0 - z*Y_0*Y_1".
std::string to_y_notation(const QOperator& p);

}  // namespace qalg
