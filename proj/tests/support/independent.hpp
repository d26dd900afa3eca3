#pragma once

// Test-side reference computations. These deliberately share no numerics with
// the library: long double arithmetic, a fixed fine scan, sinh/cosh identities
// for the negative branch, and adaptive quadrature for overlaps.

#include <cstdint>
#include <optional>
#include <vector>

#include "wellspec/wavefn.hpp"

namespace indep {

/// Ordinary positive roots below k_max. For an exact position with
/// denominator n > 0 the nodal roots are divided out before scanning.
std::vector<double> positive_roots(double rho, double f, double k_max, std::int64_t n = 0);

/// kappaL of the negative-energy state, from f kappa = 2 sinh(kappa rho) sinh(kappa (1 - rho)) / sinh kappa.
/// Valid for f above about 4e-4 (long double range).
std::optional<double> negative_kappa(double rho, double f);

/// Ascending energies below k_max^2, nodal levels included when n > 0.
std::vector<double> energies(double rho, double f, double k_max, std::int64_t n = 0);

/// Lowest positive root of tan(kL/2) = f kL on (pi, 2 pi); the rho = 1/2 repulsive ground state.
double half_well_repulsive_root(double f);

/// Root of tanh(kappaL/2) = f kappaL; the rho = 1/2 attractive bound state.
double half_well_bound_kappa(double f);

/// Overlap integral by adaptive Gauss-Kronrod quadrature on each segment.
double quadrature_inner(const wellspec::PiecewiseWave& a, const wellspec::PiecewiseWave& b);

}  // namespace indep
