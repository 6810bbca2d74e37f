#pragma once

#include <string>

#include "qalg/qoperator.hpp"

namespace qalg {

struct EquationSource {
  std::string text;
  QOperator parsed;  // lhs - rhs
  long q_denominator = 1;
  Mode mode = Mode::Exact;
};

// Parses "lhs = rhs" (or a single expression meaning expr = 0) over f, z, q.
// Lines starting with '#' are ignored. A numeric ring makes q its value and allows i.
EquationSource parse_equation(const std::string& text, Ring ring = Ring::exact());

EquationSource load_equation_file(const std::string& path, Ring ring = Ring::exact());

}  // namespace qalg
