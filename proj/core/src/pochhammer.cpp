#include "qalg/pochhammer.hpp"

#include "qalg/errors.hpp"

namespace qalg {

std::complex<double> pochhammer(std::complex<double> z, std::complex<double> q, std::optional<long> n,
                                double tol) {
  if (!(tol > 0)) fail(ErrorKind::InvalidArgument, "tolerance must be positive");
  std::complex<double> prod = 1.0, zk = z;
  if (n) {
    if (*n < 0) fail(ErrorKind::InvalidArgument, "negative length");
    for (long k = 0; k < *n; ++k, zk *= q) prod *= 1.0 - zk;
    return prod;
  }
  if (std::abs(q) >= 1.0) fail(ErrorKind::DivergentProduct, "infinite product needs |q| < 1");
  for (long k = 0; k < 1000000; ++k, zk *= q) {
    prod *= 1.0 - zk;
    if (std::abs(zk) < tol) return prod;
  }
  fail(ErrorKind::NoConvergence, "infinite product did not settle");
}

}  // namespace qalg
