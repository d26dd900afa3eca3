#include "support/independent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace indep {

namespace {

using real = long double;
constexpr real kPiL = std::numbers::pi_v<long double>;

template <class F>
real bisect(F&& fn, real lo, real hi) {
  real flo = fn(lo);
  for (int it = 0; it < 200; ++it) {
    const real mid = 0.5L * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const real fm = fn(mid);
    if (fm == 0.0L) return mid;
    if ((fm > 0.0L) == (flo > 0.0L)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

}  // namespace

std::vector<double> positive_roots(double rho, double f, double k_max, std::int64_t n) {
  const real r = rho;
  const real q = 1.0L - r;
  auto g = [&](real k) {
    const real value = f * k * std::sin(k) - 2.0L * std::sin(k * r) * std::sin(k * q);
    return n > 0 ? value / std::sin(k / static_cast<real>(n)) : value;
  };
  const real h = kPiL / 2048.0L;
  std::vector<double> roots;
  real prev_k = 0.5L * h;
  real prev = g(prev_k);
  for (std::int64_t i = 1;; ++i) {
    real k = (static_cast<real>(i) + 0.5L) * h;
    if (prev_k >= k_max) break;
    if (k > k_max) k = k_max;
    const real v = g(k);
    if ((v > 0.0L) != (prev > 0.0L)) roots.push_back(static_cast<double>(bisect(g, prev_k, k)));
    prev_k = k;
    prev = v;
  }
  return roots;
}

std::optional<double> negative_kappa(double rho, double f) {
  if (!(f > 0.0)) return std::nullopt;
  const real r = rho;
  // Product form; long double keeps sinh finite over the whole bracket.
  auto F = [&](real kappa) {
    return f * kappa - 2.0L * std::sinh(kappa * r) * std::sinh(kappa * (1.0L - r)) / std::sinh(kappa);
  };
  const real lo = 1e-9L;
  const real hi = 4.0L * std::max(1.0L, 1.0L / f);
  if (!(F(lo) < 0.0L && F(hi) > 0.0L)) return std::nullopt;
  return static_cast<double>(bisect(F, lo, hi));
}

std::vector<double> energies(double rho, double f, double k_max, std::int64_t n) {
  std::vector<double> out;
  if (const auto kappa = negative_kappa(rho, f)) out.push_back(-*kappa * *kappa);
  for (double k : positive_roots(rho, f, k_max, n)) out.push_back(k * k);
  if (n > 0) {
    // k_max is usually a double multiple of pi, rounded either way.
    for (std::int64_t j = 1; static_cast<real>(j * n) * kPiL <= k_max * (1.0L + 1e-15L); ++j) {
      const real k = static_cast<real>(j * n) * kPiL;
      out.push_back(static_cast<double>(k * k));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double half_well_repulsive_root(double f) {
  auto F = [&](real k) { return std::tan(0.5L * k) - f * k; };
  // tan(k/2) runs from -inf to 0 on (pi, 2 pi) while f k stays negative.
  return static_cast<double>(bisect(F, kPiL * (1.0L + 1e-15L), 2.0L * kPiL));
}

double half_well_bound_kappa(double f) {
  auto F = [&](real kappa) { return f * kappa - std::tanh(0.5L * kappa); };
  return static_cast<double>(bisect(F, 1e-9L, 4.0L * std::max(1.0L, 1.0L / f)));
}

double quadrature_inner(const wellspec::PiecewiseWave& a, const wellspec::PiecewiseWave& b) {
  using boost::math::quadrature::gauss_kronrod;
  auto integrand = [&](double x) { return wellspec::evaluate(a, x) * wellspec::evaluate(b, x); };
  const double left = gauss_kronrod<double, 61>::integrate(integrand, 0.0, a.rho, 12, 1e-12);
  const double right = gauss_kronrod<double, 61>::integrate(integrand, a.rho, 1.0, 12, 1e-12);
  return left + right;
}

}  // namespace indep
