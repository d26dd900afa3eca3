#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wellspec/report.hpp"
#include "wellspec/spectrum.hpp"

namespace wellspec::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitSolver = 3,
  kExitCheck = 4,
};

/// Runs one subcommand. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal form.
std::string format_number(double value);

struct CurvePoint {
  double kL_over_pi;
  RhsValue rhs;
};

/// kL/pi = i / samples_per_pi for i = 0 .. k_max_over_pi * samples_per_pi.
std::vector<CurvePoint> dispersion_curve(const Position& position, double k_max_over_pi,
                                         int samples_per_pi);
std::string dispersion_curve_csv(std::span<const CurvePoint> points);

enum class SignSelection { both, attract, repel };

struct SweepRow {
  double f;          // magnitude
  std::string sign;  // "attract" or "repel"
  double rho;
  double e_over_eb;
  std::optional<double> near_wall_e_over_eb;
  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// K points symmetric about 1/2 spanning [0.005, 0.995]; 1/2 itself is on the
/// grid for odd K.
std::vector<double> sweep_positions(int rho_steps);

/// Ground-state E/E_B over the (f, sign, rho) grid, sorted by (f, sign, rho).
std::vector<SweepRow> sweep_ground(std::span<const double> f_list, SignSelection signs,
                                   int rho_steps, bool with_asymptote,
                                   Execution exec = Execution::parallel);
std::string sweep_csv(std::span<const SweepRow> rows, bool with_asymptote);

struct CheckOptions {
  std::size_t count = 8;
  std::size_t oracle_m = 0;  // 0: max(2000, ceil(400 / |f|))
  double perturb = 0.0;
};

std::size_t default_oracle_m(double f);

/// Gram, matching-defect and oracle checks on the lowest `count` states.
RunReport run_checks(const DimensionlessConfig& config, const CheckOptions& options);
std::string check_table(const RunReport& report);

std::string spectrum_csv(std::span<const EigenState> entries, const DimensionlessConfig& config);

std::string plot_script(const std::string& dispersion_csv_path, const std::string& sweep_csv_path);

}  // namespace wellspec::cli
