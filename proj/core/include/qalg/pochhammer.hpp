#pragma once

#include <complex>
#include <optional>

namespace qalg {

// (z; q)_n = prod_{0 <= k < n} (1 - z q^k). With no n, the infinite product,
// stopped once the update differs from 1 by less than tol; requires |q| < 1.
std::complex<double> pochhammer(std::complex<double> z, std::complex<double> q, std::optional<long> n,
                                double tol = 1e-15);

}  // namespace qalg
