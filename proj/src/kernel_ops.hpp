#pragma once

// Per-element bodies shared by the serial and OpenMP kernels.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

#include "wellspec/kernels.hpp"

namespace wellspec::kernels::detail {

inline int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

inline PolishResult polish_one(const DispersionEvaluator& eval, const Bracket& b,
                               int max_iterations) {
  double lo = b.lo;
  double hi = b.hi;
  PolishResult result;
  int it = 0;
  for (; it < max_iterations; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) {
      result.converged = true;
      break;
    }
    const double v = eval.scan_value(mid);
    if (v == 0.0) {
      lo = hi = mid;
      result.converged = true;
      break;
    }
    if (sign_of(v) == b.sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (!result.converged) {
    result.converged = (hi - lo) <= 1e-13 * std::max(1.0, hi);
  }
  const double r_lo = std::abs(eval.residual(lo));
  const double r_hi = std::abs(eval.residual(hi));
  result.root = r_lo <= r_hi ? lo : hi;
  result.residual = r_lo <= r_hi ? r_lo : r_hi;
  result.iterations = it;
  return result;
}

inline double secular_function(const SecularProblem& p, double origin, double tau) {
  double sum = 0.0;
  const std::size_t m = p.diagonal.size();
  for (std::size_t i = 0; i < m; ++i) {
    sum += p.weights[i] / ((p.diagonal[i] - origin) - tau);
  }
  return 1.0 - p.sigma * sum;
}

// Bisection in a coordinate shifted to the pole nearest the root, so that
// d_m - E keeps full relative accuracy close to that pole.
inline bool secular_root_one(const SecularProblem& p, const SecularInterval& iv,
                             int max_iterations, double& root) {
  const double sigma_sign = p.sigma > 0.0 ? 1.0 : -1.0;
  const double mid_e = iv.lower + 0.5 * (iv.upper - iv.lower);
  const double f_mid = secular_function(p, 0.0, mid_e);
  // F decreases through the interval for sigma > 0 and increases for sigma < 0.
  const bool upper_half = f_mid * sigma_sign > 0.0;
  bool use_upper = upper_half ? iv.upper_is_pole : !iv.lower_is_pole;
  if (!iv.lower_is_pole && !iv.upper_is_pole) use_upper = upper_half;
  const double origin = use_upper ? iv.upper : iv.lower;

  double lo = (upper_half ? mid_e : iv.lower) - origin;
  double hi = (upper_half ? iv.upper : mid_e) - origin;
  // Sign of F at the lower end of the bracket.
  const double sign_lo = sigma_sign;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int it = 0; it < max_iterations; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi || (hi - lo) <= eps * std::abs(origin + mid)) {
      root = origin + mid;
      return true;
    }
    const double f = secular_function(p, origin, mid);
    if (f == 0.0) {
      root = origin + mid;
      return true;
    }
    if ((f > 0.0 ? 1.0 : -1.0) == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  root = origin + lo + 0.5 * (hi - lo);
  return false;
}

inline void symv_row(std::span<const double> a, std::size_t n, std::size_t start,
                     std::span<const double> v, double beta, std::span<double> p, std::size_t i) {
  const double* row = a.data() + i * n;
  double sum = 0.0;
  for (std::size_t j = start; j < n; ++j) sum += row[j] * v[j - start];
  p[i - start] = beta * sum;
}

inline void rank2_row(std::span<double> a, std::size_t n, std::size_t start,
                      std::span<const double> v, std::span<const double> w, std::size_t i) {
  double* row = a.data() + i * n;
  const double vi = v[i - start];
  const double wi = w[i - start];
  for (std::size_t j = start; j < n; ++j) {
    row[j] -= vi * w[j - start] + wi * v[j - start];
  }
}

inline void rank_one_row(std::span<const double> d, std::span<const double> v, double sigma,
                         std::span<double> out, std::size_t i) {
  const std::size_t m = d.size();
  double* row = out.data() + i * m;
  // sigma * (v_i v_j) keeps the matrix exactly symmetric.
  for (std::size_t j = 0; j < m; ++j) row[j] = -sigma * (v[i] * v[j]);
  row[i] += d[i];
}

}  // namespace wellspec::kernels::detail
