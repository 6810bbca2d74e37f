#include "qalg/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qalg/errors.hpp"

namespace qalg {

namespace {

constexpr double kMachineEps = std::numeric_limits<double>::epsilon();

// p(x) and p'(x) by Horner.
void horner(const std::vector<cdouble>& c, cdouble x, cdouble& p, cdouble& dp) {
  p = 0.0;
  dp = 0.0;
  for (size_t i = c.size(); i-- > 0;) {
    dp = dp * x + p;
    p = p * x + c[i];
  }
}

// Bound on |p(x)| rounding error.
double horner_scale(const std::vector<cdouble>& c, double r) {
  double s = 0.0;
  for (size_t i = c.size(); i-- > 0;) s = s * r + std::abs(c[i]);
  return s;
}

// Positive root of |a_n| x^n = sum_{i<n} |a_i| x^i.
double cauchy_bound(const std::vector<cdouble>& c) {
  size_t n = c.size() - 1;
  double lead = std::abs(c[n]);
  auto g = [&](double x) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += std::abs(c[i]) * std::pow(x, static_cast<double>(i));
    return lead * std::pow(x, static_cast<double>(n)) - s;
  };
  double hi = 1.0;
  while (g(hi) < 0) hi *= 2.0;
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    (g(mid) < 0 ? lo : hi) = mid;
  }
  return hi;
}

bool root_less(cdouble a, cdouble b) {
  double ma = std::abs(a), mb = std::abs(b);
  double tol = 1e-12 * (1.0 + std::max(ma, mb));
  if (std::fabs(ma - mb) > tol) return ma < mb;
  double aa = std::arg(a), ab = std::arg(b);
  if (std::fabs(aa - ab) > 1e-12) return aa < ab;
  return false;
}

// Taylor coefficients p^(k)(c)/k! scaled by the magnitude of the corresponding terms.
bool is_multiple_root(const std::vector<cdouble>& c, cdouble center, int m) {
  size_t n = c.size() - 1;
  double r = std::abs(center);
  std::vector<cdouble> shifted(c);
  // Synthetic division gives successive Taylor coefficients at center.
  for (int k = 0; k < m; ++k) {
    cdouble acc = 0.0;
    double scale = 0.0;
    for (size_t i = n + 1; i-- > static_cast<size_t>(k);) {
      acc = acc * center + shifted[i];
      shifted[i] = acc;
    }
    // shifted[k] now holds the k-th Taylor coefficient.
    double binom_scale = 0.0;
    for (size_t i = k; i <= n; ++i) {
      double b = 1.0;
      for (int j = 0; j < k; ++j) b = b * static_cast<double>(i - j) / static_cast<double>(j + 1);
      binom_scale += b * std::abs(c[i]) * std::pow(r, static_cast<double>(i - k));
    }
    scale = binom_scale;
    if (std::abs(shifted[k]) > 1e-6 * scale) return false;
  }
  return true;
}

}  // namespace

int RootSet::total() const {
  int t = 0;
  for (int m : multiplicities) t += m;
  return t;
}

RootSet complex_roots(const std::vector<cdouble>& coeffs_in, double tol, int max_iter) {
  std::vector<cdouble> c = coeffs_in;
  double cmax = 0.0;
  for (auto x : c) cmax = std::max(cmax, std::abs(x));
  if (cmax == 0.0) fail(ErrorKind::ZeroPolynomial, "all coefficients vanish");
  double eps0 = 1e-12 * (1.0 + cmax);
  while (!c.empty() && std::abs(c.back()) <= eps0) c.pop_back();
  if (c.size() <= 1) fail(ErrorKind::InvalidArgument, "polynomial has degree zero");

  RootSet out;
  size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == 0.0) ++zeros;
  std::vector<cdouble> p(c.begin() + zeros, c.end());
  size_t n = p.size() - 1;

  std::vector<cdouble> z(n);
  if (n > 0) {
    double r = cauchy_bound(p);
    // Starting radius between the geometric mean of the moduli and the Cauchy bound.
    double gm = std::pow(std::abs(p[0]) / std::abs(p[n]), 1.0 / static_cast<double>(n));
    double rad = std::min(r, std::max(gm, 1e-3 * r));
    for (size_t k = 0; k < n; ++k) {
      double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
      z[k] = std::polar(rad * (1.0 + 0.01 * static_cast<double>(k % 3)), th);
    }
    std::vector<bool> done(n, false);
    bool all_done = false;
    for (int it = 0; it < max_iter && !all_done; ++it) {
      all_done = true;
      for (size_t k = 0; k < n; ++k) {
        if (done[k]) continue;
        cdouble pv, dpv;
        horner(p, z[k], pv, dpv);
        double err = 4.0 * kMachineEps * horner_scale(p, std::abs(z[k]));
        if (std::abs(pv) <= err) {
          done[k] = true;
          continue;
        }
        cdouble ratio = pv / dpv;
        cdouble sum = 0.0;
        for (size_t j = 0; j < n; ++j) {
          if (j != k) sum += 1.0 / (z[k] - z[j]);
        }
        cdouble w = ratio / (1.0 - ratio * sum);
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
          w = std::polar(1e-8 * (1.0 + std::abs(z[k])), static_cast<double>(k));
        }
        z[k] -= w;
        if (std::abs(w) <= tol * (1.0 + std::abs(z[k]))) {
          done[k] = true;
        } else {
          all_done = false;
        }
      }
    }
    if (!all_done) {
      for (size_t k = 0; k < n; ++k) {
        cdouble pv, dpv;
        horner(p, z[k], pv, dpv);
        if (std::abs(pv) > 1e-9 * horner_scale(p, std::abs(z[k]))) {
          fail(ErrorKind::NoConvergence, "Aberth iteration did not converge");
        }
      }
    }
  }

  std::sort(z.begin(), z.end(), root_less);
  // Single-linkage clusters, each confirmed by vanishing derivatives at its centroid.
  std::vector<bool> used(n, false);
  for (size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::vector<size_t> cluster{i};
    used[i] = true;
    for (size_t g = 0; g < cluster.size(); ++g) {
      for (size_t j = 0; j < n; ++j) {
        if (used[j]) continue;
        double rad = std::max(10.0 * tol, 1e-4) * (1.0 + std::abs(z[cluster[g]]));
        if (std::abs(z[j] - z[cluster[g]]) <= rad) {
          used[j] = true;
          cluster.push_back(j);
        }
      }
    }
    cdouble center = 0.0;
    for (size_t j : cluster) center += z[j];
    center /= static_cast<double>(cluster.size());
    if (cluster.size() > 1 && is_multiple_root(p, center, static_cast<int>(cluster.size()))) {
      out.roots.push_back(center);
      out.multiplicities.push_back(static_cast<int>(cluster.size()));
    } else {
      for (size_t j : cluster) {
        out.roots.push_back(z[j]);
        out.multiplicities.push_back(1);
      }
    }
  }
  if (zeros > 0) {
    out.roots.insert(out.roots.begin(), cdouble(0.0));
    out.multiplicities.insert(out.multiplicities.begin(), static_cast<int>(zeros));
  }
  // Keep the order stable after merging.
  std::vector<size_t> idx(out.roots.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return root_less(out.roots[a], out.roots[b]); });
  RootSet sorted;
  for (size_t i : idx) {
    sorted.roots.push_back(out.roots[i]);
    sorted.multiplicities.push_back(out.multiplicities[i]);
  }
  for (auto r : sorted.roots) {
    cdouble pv, dpv;
    horner(c, r, pv, dpv);
    sorted.residual = std::max(sorted.residual, std::abs(pv));
  }
  return sorted;
}

RootSet complex_roots(const UniPoly& p, double tol, int max_iter) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "all coefficients vanish");
  long lo = to_long(p.order());
  if (lo < 0) fail(ErrorKind::InvalidArgument, "Laurent polynomial with negative exponents");
  std::vector<cdouble> dense = p.numeric_dense();
  dense.insert(dense.begin(), static_cast<size_t>(lo), cdouble(0.0));
  return complex_roots(dense, tol, max_iter);
}

RootSet nonzero_roots(const std::vector<cdouble>& coeffs, double tol) {
  double cmax = 0.0;
  for (auto x : coeffs) cmax = std::max(cmax, std::abs(x));
  if (cmax == 0.0) fail(ErrorKind::ZeroPolynomial, "all coefficients vanish");
  double eps0 = 1e-12 * (1.0 + cmax);
  size_t lo = 0;
  while (lo < coeffs.size() && std::abs(coeffs[lo]) <= eps0) ++lo;
  std::vector<cdouble> p(coeffs.begin() + lo, coeffs.end());
  while (!p.empty() && std::abs(p.back()) <= eps0) p.pop_back();
  if (p.size() <= 1) return RootSet{};
  return complex_roots(p, tol);
}

RootSet nonzero_roots(const UniPoly& p, double tol) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "all coefficients vanish");
  return nonzero_roots(p.numeric_dense(), tol);
}

SmallestRoot smallest_modulus_root(const std::vector<cdouble>& coeffs, double tol) {
  double cmax = 0.0;
  for (auto x : coeffs) cmax = std::max(cmax, std::abs(x));
  if (cmax == 0.0) fail(ErrorKind::ZeroPolynomial, "all coefficients vanish");
  if (coeffs.empty() || std::abs(coeffs[0]) <= 1e-12 * (1.0 + cmax)) {
    fail(ErrorKind::InvalidArgument, "smallest root needs p(0) != 0");
  }
  SmallestRoot out;
  size_t deg = coeffs.size() - 1;
  while (deg > 0 && std::abs(coeffs[deg]) <= 1e-12 * (1.0 + cmax)) --deg;
  if (deg == 0) {
    out.at_infinity = true;
    out.root = cdouble(std::numeric_limits<double>::infinity(), 0.0);
    return out;
  }
  RootSet rs = complex_roots(coeffs, tol);
  out.root = rs.roots[0];
  out.multiplicity = rs.multiplicities[0];
  double m0 = std::abs(out.root);
  for (size_t i = 1; i < rs.roots.size(); ++i) {
    if (std::fabs(std::abs(rs.roots[i]) - m0) <= 1e-8 * m0) out.unique_at_modulus = false;
  }
  return out;
}

SmallestRoot smallest_modulus_root(const UniPoly& p, double tol) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "all coefficients vanish");
  if (p.order() != 0) fail(ErrorKind::InvalidArgument, "smallest root needs p(0) != 0");
  return smallest_modulus_root(p.numeric_dense(), tol);
}

Depth depth_root(const std::vector<int>& alphas) {
  if (alphas.empty()) fail(ErrorKind::InvalidArgument, "depth of a constant factor");
  if (!std::is_sorted(alphas.begin(), alphas.end())) fail(ErrorKind::InvalidArgument, "alphas must be sorted");
  if (alphas.front() < 0) fail(ErrorKind::NegativeAlpha, "depth needs nonnegative alphas");
  if (alphas.front() == 0) return Depth{Depth::Kind::Zero, 0.0};
  if (alphas.size() == 1) return Depth{Depth::Kind::Infinite, std::numeric_limits<double>::infinity()};
  auto laplace = [&](double s) {
    double t = 0.0;
    for (int a : alphas) t += std::exp(-s * a);
    return t;
  };
  // laplace is decreasing from ell > 1 at s=0 to 0.
  double lo = 0.0, hi = 1.0;
  while (laplace(hi) > 1.0) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (laplace(mid) > 1.0 ? lo : hi) = mid;
    if (hi - lo < 1e-15 * hi) break;
  }
  return Depth{Depth::Kind::Finite, 1.0 / (0.5 * (lo + hi))};
}

}  // namespace qalg
