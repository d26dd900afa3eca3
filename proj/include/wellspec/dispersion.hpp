#pragma once

#include <cstdint>
#include <variant>

#include "wellspec/model.hpp"

namespace wellspec {

/// g(kL) = f kL sin(kL) - 2 sin(kL rho) sin(kL (1 - rho)). Vanishes at every
/// positive-energy eigenvalue, nodal ones included.
double dispersion_residual(double kL, const DimensionlessConfig& config);

/// Negative-energy residual divided by sinh(kappaL):
///   f kappaL - 2 sinh(kappaL rho) sinh(kappaL (1 - rho)) / sinh(kappaL).
/// The undivided product form overflows once kappaL exceeds ~710.
double negative_residual(double kappaL, const DimensionlessConfig& config);

/// Absolute tolerance a certified root must meet: tol * max(1, |f| * wavenumber).
/// The scale tracks the size of the f kL sin(kL) term, whose rounding floor grows
/// with |f| kL.
double certificate_tolerance(double wavenumber, const DimensionlessConfig& config, double tol);

struct PoleMarker {
  friend bool operator==(PoleMarker, PoleMarker) = default;
};
using RhsValue = std::variant<double, PoleMarker>;

inline constexpr double kDefaultPoleThreshold = 1e-9;

/// 2 sin(kL rho) sin(kL (1 - rho)) / sin(kL). Returns PoleMarker where
/// |sin(kL)| < pole_threshold unless the numerator vanishes too, in which case
/// the removable value is returned (l'Hopital).
RhsValue rhs_positive(double kL, double rho, double pole_threshold = kDefaultPoleThreshold);
RhsValue rhs_positive(double kL, const DimensionlessConfig& config,
                      double pole_threshold = kDefaultPoleThreshold);

/// 2 sinh(kappaL rho) sinh(kappaL (1 - rho)) / sinh(kappaL), evaluated without
/// overflow. Rises monotonically from 0 towards 1.
double rhs_negative(double kappaL, double rho);
double rhs_negative(double kappaL, double rho, double one_minus_rho);

/// Scan function for the positive-energy dispersion relation.
///
/// For a generic position this is g(kL). For an exact position p/n whose first
/// nodal value n*pi lies in the scanned range it is g(kL) / sin(kL/n): every
/// factor of g contains sin(kL/n) (sin(m u) = sin(u) U_{m-1}(cos u)), so the
/// quotient is entire and the nodal roots kL = j n pi are removed. Ordinary
/// roots that approach a nodal value then keep a clean sign change.
class DispersionEvaluator {
 public:
  DispersionEvaluator(const DimensionlessConfig& config, double k_max);

  /// The raw residual g(kL).
  double residual(double kL) const noexcept;
  /// The value whose sign changes bracket ordinary roots.
  double scan_value(double kL) const noexcept;
  /// Sign of scan_value as kL -> 0+ (leading term (f - 2 rho (1 - rho)) kL^2).
  int sign_at_zero() const noexcept;

  bool deflates_nodal() const noexcept { return deflate_; }
  const DimensionlessConfig& config() const noexcept { return config_; }

 private:
  DimensionlessConfig config_;
  double f_;
  double rho_;
  double one_minus_rho_;
  bool deflate_ = false;
  std::int64_t p_ = 0;
  std::int64_t n_ = 0;
};

}  // namespace wellspec
