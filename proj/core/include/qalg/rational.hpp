#pragma once

#include <gmpxx.h>

#include <string>

namespace qalg {

// Exact exponent of z or q, always kept canonical.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

bool is_integer(const Rational& r);
// Throws NonIntegerExponent when r is not an integer or does not fit in long.
long to_long(const Rational& r);
long floor_long(const Rational& r);
double to_double(const Rational& r);

std::string to_string(const Rational& r);

// Best rational approximation with denominator <= max_den, via continued fractions.
Rational rationalize(double x, long max_den);

}  // namespace qalg
