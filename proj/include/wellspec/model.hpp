#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <variant>

// Unit convention used throughout: hbar^2/(2m) = 1 and L = 1. Lengths are
// fractions of the well width, energies are in units of hbar^2/(2 m L^2).
// With f = Lambda/L the delta strength is lambda = 2/f, the free-space binding
// energy is E_B = 1/f^2 and E/E_B = E * f^2.

namespace wellspec {

inline constexpr double kPi = std::numbers::pi;

/// Reduced fraction p/n with 0 < p < n and gcd(p, n) = 1.
class RationalPosition {
 public:
  /// Reduces p/n. Throws PositionOutOfRange unless 0 < p < n.
  RationalPosition(std::int64_t p, std::int64_t n);

  std::int64_t numerator() const noexcept { return p_; }
  std::int64_t denominator() const noexcept { return n_; }
  double value() const noexcept;
  std::string to_string() const;

  friend bool operator==(const RationalPosition&, const RationalPosition&) = default;

 private:
  std::int64_t p_;
  std::int64_t n_;
};

RationalPosition reduce_position(std::int64_t p, std::int64_t n);

/// Parses "P/N". Throws PositionOutOfRange on malformed or out-of-range input.
RationalPosition parse_rational_position(const std::string& text);

/// Either an exact rational position (unlocks nodal states) or a generic real
/// position, which is treated as irrational.
using Position = std::variant<RationalPosition, double>;

/// Problem instance: delta at rho in (0, 1) with coupling f = Lambda/L != 0.
class DimensionlessConfig {
 public:
  DimensionlessConfig(Position position, double f);

  static DimensionlessConfig exact(std::int64_t p, std::int64_t n, double f) {
    return {RationalPosition(p, n), f};
  }
  static DimensionlessConfig generic(double rho, double f) { return {rho, f}; }

  const Position& position() const noexcept { return position_; }
  bool is_exact() const noexcept { return std::holds_alternative<RationalPosition>(position_); }
  std::optional<RationalPosition> exact_position() const;

  double rho() const noexcept { return rho_; }
  /// 1 - rho, computed as (n - p)/n for exact positions.
  double one_minus_rho() const noexcept { return one_minus_rho_; }
  double f() const noexcept { return f_; }

  double lambda() const noexcept { return 2.0 / f_; }
  double binding_energy() const noexcept { return 1.0 / (f_ * f_); }
  /// 2 rho (1 - rho): the coupling at which the ground state sits at E = 0.
  double marginal_coupling() const noexcept { return 2.0 * rho_ * one_minus_rho_; }

  /// Same coupling, delta reflected to 1 - rho.
  DimensionlessConfig mirrored() const;
  DimensionlessConfig with_coupling(double f) const { return {position_, f}; }

  std::string describe() const;

 private:
  Position position_;
  double rho_;
  double one_minus_rho_;
  double f_;
};

/// 2 rho - 1.
double mu(const DimensionlessConfig& config);

/// sin(pi a / b) with the argument reduced in integers, so that multiples of
/// pi give exactly zero. Requires b > 0.
double sin_pi_ratio(std::int64_t a, std::int64_t b);

}  // namespace wellspec
