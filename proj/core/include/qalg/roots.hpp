#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "qalg/unipoly.hpp"

namespace qalg {

struct RootSet {
  std::vector<cdouble> roots;        // distinct, sorted by (modulus, argument)
  std::vector<int> multiplicities;  // parallel to roots
  double residual = 0.0;            // max |p(r)| over the roots

  int total() const;
};

// Roots of sum coeffs[i] x^i by Aberth-Ehrlich iteration.
RootSet complex_roots(const std::vector<cdouble>& coeffs, double tol = 1e-12, int max_iter = 1000);
RootSet complex_roots(const UniPoly& p, double tol = 1e-12, int max_iter = 1000);

// Divides out the power of x at the bottom first.
RootSet nonzero_roots(const std::vector<cdouble>& coeffs, double tol = 1e-12);
RootSet nonzero_roots(const UniPoly& p, double tol = 1e-12);

struct SmallestRoot {
  cdouble root = 0.0;
  int multiplicity = 0;
  bool unique_at_modulus = true;
  bool at_infinity = false;  // the polynomial is a nonzero constant
};

SmallestRoot smallest_modulus_root(const std::vector<cdouble>& coeffs, double tol = 1e-12);
SmallestRoot smallest_modulus_root(const UniPoly& p, double tol = 1e-12);

struct Depth {
  enum class Kind { Zero, Finite, Infinite } kind = Kind::Zero;
  double value = 0.0;
};

// D = 1/s where sum exp(-s alpha_i) = 1.
Depth depth_root(const std::vector<int>& alphas);

}  // namespace qalg
