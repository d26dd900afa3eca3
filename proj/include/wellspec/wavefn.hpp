#pragma once

#include <cstdint>
#include <utility>

#include "wellspec/model.hpp"
#include "wellspec/spectrum.hpp"

namespace wellspec {

/// Shape function on one side of the delta, in the distance t from that side's wall.
enum class Basis {
  sine,           // sin(rate t)
  sinh_scaled,    // sinh(rate t) / sinh(rate length), overflow-free
  linear_scaled,  // t / length
};

struct Segment {
  Basis basis;
  double rate;
  double length;
  double coef;

  double value(double t) const;
  /// d/dt of coef * shape.
  double slope(double t) const;
};

enum class WaveKind { oscillatory, evanescent, nodal, threshold, coupling_limit };

/// Piecewise eigenfunction on [0, 1]: left segment on [0, rho] in t = x,
/// right segment on [rho, 1] in t = 1 - x. Both vanish at their wall.
struct PiecewiseWave {
  WaveKind kind;
  double rho;
  Segment left;
  Segment right;
  /// Factor applied to the unnormalized amplitudes.
  double norm;

  double amp_left() const noexcept { return left.coef; }
  double amp_right() const noexcept { return right.coef; }
};

/// C (sin(k(1-rho)) sin(kx), sin(k rho) sin(k(1-x))). No certificate check.
PiecewiseWave oscillatory_wave(double kL, const DimensionlessConfig& config);
/// The sinh analogue for E = -kappa^2. No certificate check.
PiecewiseWave evanescent_wave(double kappaL, const DimensionlessConfig& config);
/// sqrt(2) sin(j n pi x).
PiecewiseWave nodal_wave(const Nodal& state, const DimensionlessConfig& config);
/// Zero-energy state at f = 2 rho (1 - rho): a tent through the delta.
PiecewiseWave threshold_wave(const DimensionlessConfig& config);
/// Limit as f -> 0 of the ordinary state whose wavenumber tends to j n pi at
/// rho = p/n: sin(j n pi x) with different amplitudes on each side.
PiecewiseWave coupling_limit_wave(const RationalPosition& pos, std::int64_t j);

/// Normalized wave for a solved state. Throws InconsistentState unless the state
/// satisfies this config's dispersion relation to `tol` (scaled as in the solver).
PiecewiseWave build_wave(const EigenState& state, const DimensionlessConfig& config,
                         double tol = 1e-10);

/// Throws DomainError outside [0, 1]; exactly zero at both walls.
double evaluate(const PiecewiseWave& wave, double x);
/// dpsi/dx; at x = rho returns the left-sided value.
double derivative(const PiecewiseWave& wave, double x);

/// Closed-form overlap integral over [0, 1]. Throws DomainError when the waves
/// have different junctions.
double inner_product(const PiecewiseWave& a, const PiecewiseWave& b);

/// Integral over [0, length] of shape_a * shape_b (without coefficients).
double segment_overlap(Basis a, double rate_a, Basis b, double rate_b, double length);

struct MatchingDefect {
  double continuity;
  double jump;
};

/// |psi+(rho) - psi-(rho)| and |psi'+(rho) - psi'-(rho) + (2/f) psi(rho)|.
MatchingDefect matching_defect(const PiecewiseWave& wave, const DimensionlessConfig& config);

}  // namespace wellspec
