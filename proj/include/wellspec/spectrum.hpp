#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "wellspec/dispersion.hpp"
#include "wellspec/kernels.hpp"
#include "wellspec/model.hpp"

namespace wellspec {

/// Free-well state with a node at the delta: kL = j n pi exactly.
struct Nodal {
  std::int64_t n;
  std::int64_t j;
  friend bool operator==(const Nodal&, const Nodal&) = default;
};

/// Positive-energy solution of the dispersion relation. kL = 0 marks the
/// zero-energy threshold state that exists only at f = 2 rho (1 - rho).
struct OrdinaryPositive {
  double kL;
  friend bool operator==(const OrdinaryPositive&, const OrdinaryPositive&) = default;
};

/// The (at most one) negative-energy state, E = -(kappaL)^2.
struct OrdinaryNegative {
  double kappaL;
  friend bool operator==(const OrdinaryNegative&, const OrdinaryNegative&) = default;
};

using StateKind = std::variant<Nodal, OrdinaryPositive, OrdinaryNegative>;

struct EigenState {
  StateKind kind;
  double energy;
  double residual;

  bool is_nodal() const noexcept { return std::holds_alternative<Nodal>(kind); }
  bool is_negative() const noexcept { return std::holds_alternative<OrdinaryNegative>(kind); }
  /// kL for positive kinds, kappaL for the negative one.
  double wavenumber() const noexcept;
  std::string_view label() const noexcept;
};

struct SolverOptions {
  double residual_tol = 1e-10;
  int samples_per_pi = 64;
  int refine_factor = 64;
  double refine_halfwidth = kPi / 16.0;
  double degeneracy_tol = 1e-9;
  int max_iterations = 400;
  Execution execution = Execution::serial;
};

inline constexpr double kDefaultKMax = 20.0 * kPi;

struct Spectrum {
  DimensionlessConfig config;
  std::vector<EigenState> entries;  // ascending energy
  double k_max;
  /// Ordinary roots dropped because they sat within degeneracy_tol of a nodal value.
  std::size_t merged_near_nodal = 0;

  std::vector<double> energies() const;
  std::size_t nodal_count() const;
};

/// Scan grid over (0, k_max]: samples_per_pi points per pi, refined by
/// refine_factor within refine_halfwidth of every integer multiple of pi
/// (which includes every nodal value and kL = 0).
std::vector<double> scan_grid(double k_max, const SolverOptions& opts);

/// Nodal{n, j} for every j >= 1 with j n pi <= k_max.
std::vector<EigenState> enumerate_nodal(const RationalPosition& pos, double k_max);

/// Every ordinary positive-energy root in (0, k_max), ascending.
/// Throws SolverFailure (with the bracket) if a root cannot be certified.
std::vector<EigenState> find_ordinary_positive(const DimensionlessConfig& config, double k_max,
                                               const SolverOptions& opts = {});

/// The negative-energy state; present iff 0 < f < 2 rho (1 - rho). Throws
/// SolverFailure when -kappaL^2 overflows (f below about 1e-154).
std::optional<EigenState> find_negative_root(const DimensionlessConfig& config,
                                             const SolverOptions& opts = {});

EigenState ground_state(const DimensionlessConfig& config, const SolverOptions& opts = {});

/// Ground-state energies for many configs; runs the configs in parallel under
/// Execution::parallel with results in input order.
std::vector<double> ground_state_energies(std::span<const DimensionlessConfig> configs,
                                          const SolverOptions& opts = {});

Spectrum full_spectrum(const DimensionlessConfig& config, double k_max = kDefaultKMax,
                       const SolverOptions& opts = {});

/// Leading weak-coupling estimate: N pi - 2 sin^2(N pi rho) / (N pi f).
double weak_coupling_estimate(std::int64_t N, const DimensionlessConfig& config);

/// The lowest `count` split-well levels {n1 pi / rho} U {n2 pi / (1 - rho)},
/// ascending. Values where both ladders coincide (kL = j n pi for an exact
/// position) are left out, so fewer than `count` values may come back.
std::vector<double> strong_coupling_estimates(const DimensionlessConfig& config, std::size_t count);

/// Positions where the ground state crosses E = 0 for coupling f.
std::vector<double> zero_energy_positions(double f);

/// (N pi)^2 (1 - 4 eps^2 / f): near-wall asymptotic energy with the delta at
/// distance eps from a wall.
double near_wall_energy(std::int64_t N, double eps, double f);

}  // namespace wellspec
