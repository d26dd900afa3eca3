#include "wellspec/dispersion.hpp"

#include <algorithm>
#include <cmath>

namespace wellspec {

namespace {

// Below this |sin(kL/n)| the deflated scan function switches from the plain
// quotient g / sin(kL/n) to the Chebyshev-factored form.
constexpr double kDeflateSwitch = 1e-3;

// U_m(cos u) by the three-term recurrence; bounded by m + 1 on [-1, 1].
double chebyshev_u(std::int64_t m, double c) {
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * c;
  for (std::int64_t i = 1; i < m; ++i) {
    const double next = 2.0 * c * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double dispersion_residual(double kL, const DimensionlessConfig& config) {
  return config.f() * kL * std::sin(kL) -
         2.0 * std::sin(kL * config.rho()) * std::sin(kL * config.one_minus_rho());
}

double rhs_negative(double kappaL, double rho, double one_minus_rho) {
  if (kappaL == 0.0) return 0.0;
  // 2 sinh(a) sinh(b) / sinh(a + b) = (1 - e^{-2a})(1 - e^{-2b}) / (1 - e^{-2(a+b)})
  const double left = -std::expm1(-2.0 * kappaL * rho);
  const double right = -std::expm1(-2.0 * kappaL * one_minus_rho);
  const double whole = -std::expm1(-2.0 * kappaL);
  return left * right / whole;
}

double rhs_negative(double kappaL, double rho) { return rhs_negative(kappaL, rho, 1.0 - rho); }

double negative_residual(double kappaL, const DimensionlessConfig& config) {
  return config.f() * kappaL - rhs_negative(kappaL, config.rho(), config.one_minus_rho());
}

double certificate_tolerance(double wavenumber, const DimensionlessConfig& config, double tol) {
  return tol * std::max(1.0, std::abs(config.f()) * wavenumber);
}

namespace {

RhsValue rhs_positive_impl(double kL, double rho, double one_minus_rho, double pole_threshold) {
  const double s = std::sin(kL);
  const double a = std::sin(kL * rho);
  const double b = std::sin(kL * one_minus_rho);
  if (std::abs(s) >= pole_threshold) return 2.0 * a * b / s;
  if (std::abs(a) < pole_threshold && std::abs(b) < pole_threshold) {
    // Removable: numerator and denominator vanish together.
    const double numerator_slope =
        2.0 * (rho * std::cos(kL * rho) * b + one_minus_rho * a * std::cos(kL * one_minus_rho));
    return numerator_slope / std::cos(kL);
  }
  return PoleMarker{};
}

}  // namespace

RhsValue rhs_positive(double kL, double rho, double pole_threshold) {
  return rhs_positive_impl(kL, rho, 1.0 - rho, pole_threshold);
}

RhsValue rhs_positive(double kL, const DimensionlessConfig& config, double pole_threshold) {
  return rhs_positive_impl(kL, config.rho(), config.one_minus_rho(), pole_threshold);
}

DispersionEvaluator::DispersionEvaluator(const DimensionlessConfig& config, double k_max)
    : config_(config),
      f_(config.f()),
      rho_(config.rho()),
      one_minus_rho_(config.one_minus_rho()) {
  if (const auto exact = config.exact_position()) {
    p_ = exact->numerator();
    n_ = exact->denominator();
    // Deflate only when a nodal value can fall inside (or next to) the scan.
    deflate_ = static_cast<double>(n_) * kPi <= k_max + kPi;
  }
}

double DispersionEvaluator::residual(double kL) const noexcept {
  return f_ * kL * std::sin(kL) - 2.0 * std::sin(kL * rho_) * std::sin(kL * one_minus_rho_);
}

double DispersionEvaluator::scan_value(double kL) const noexcept {
  if (!deflate_) return residual(kL);
  const double u = kL / static_cast<double>(n_);
  const double su = std::sin(u);
  if (std::abs(su) >= kDeflateSwitch) return residual(kL) / su;
  const double cu = std::cos(u);
  return f_ * kL * chebyshev_u(n_ - 1, cu) -
         2.0 * std::sin(kL * rho_) * chebyshev_u(n_ - p_ - 1, cu);
}

int DispersionEvaluator::sign_at_zero() const noexcept {
  const double lead = f_ - 2.0 * rho_ * one_minus_rho_;
  if (lead > 0.0) return 1;
  // At lead == 0 the kL^4 coefficient -(1 - mu^2)^2 / 24 decides.
  return -1;
}

}  // namespace wellspec
