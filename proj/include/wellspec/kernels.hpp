#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::omp; the two perform the
// same floating-point operations per output element, so their results are
// bitwise identical for any thread count. Tests compare them directly and
// bench/ times them against each other.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wellspec/dispersion.hpp"

namespace wellspec {

enum class Execution { serial, parallel };

/// Caps OpenMP parallelism from WELLSPEC_THREADS (when set and positive).
/// Returns the thread count in effect.
int apply_thread_cap_from_env();

namespace kernels {

/// A sign change of the scan function: scan_value(lo) has sign sign_lo and
/// scan_value(hi) the opposite sign.
struct Bracket {
  double lo;
  double hi;
  int sign_lo;
};

struct PolishResult {
  double root = 0.0;
  double residual = 0.0;  // |g(root)|
  int iterations = 0;
  bool converged = false;
};

/// One interval of the diagonal-plus-rank-one secular equation
///   1 - sigma * sum_m w_m / (d_m - E) = 0
/// holding exactly one root. Endpoints flagged as poles are entries of d.
struct SecularInterval {
  double lower;
  double upper;
  bool lower_is_pole;
  bool upper_is_pole;
};

struct SecularProblem {
  std::span<const double> diagonal;  // ascending
  std::span<const double> weights;   // v_m^2, all nonzero
  double sigma;
};

namespace serial {

void evaluate_scan(const DispersionEvaluator& eval, std::span<const double> grid,
                   std::span<double> out);

void polish_brackets(const DispersionEvaluator& eval, std::span<const Bracket> brackets,
                     int max_iterations, std::span<PolishResult> out);

/// Fills the dense M x M sine-basis Hamiltonian (row-major).
void fill_rank_one_matrix(std::span<const double> diagonal, std::span<const double> v, double sigma,
                          std::span<double> out);

/// p[i - start] = beta * sum_j A[i][j] v[j - start] for i, j >= start.
void householder_symv(std::span<const double> a, std::size_t n, std::size_t start,
                      std::span<const double> v, double beta, std::span<double> p);

/// A[i][j] -= v_i w_j + w_i v_j for i, j >= start.
void householder_rank2(std::span<double> a, std::size_t n, std::size_t start,
                       std::span<const double> v, std::span<const double> w);

/// Returns the number of intervals whose root did not converge within
/// max_iterations (their out entry is the last midpoint).
std::size_t secular_roots(const SecularProblem& problem, std::span<const SecularInterval> intervals,
                          int max_iterations, std::span<double> out);

}  // namespace serial

namespace omp {

void evaluate_scan(const DispersionEvaluator& eval, std::span<const double> grid,
                   std::span<double> out);

void polish_brackets(const DispersionEvaluator& eval, std::span<const Bracket> brackets,
                     int max_iterations, std::span<PolishResult> out);

void fill_rank_one_matrix(std::span<const double> diagonal, std::span<const double> v, double sigma,
                          std::span<double> out);

void householder_symv(std::span<const double> a, std::size_t n, std::size_t start,
                      std::span<const double> v, double beta, std::span<double> p);

void householder_rank2(std::span<double> a, std::size_t n, std::size_t start,
                       std::span<const double> v, std::span<const double> w);

std::size_t secular_roots(const SecularProblem& problem, std::span<const SecularInterval> intervals,
                          int max_iterations, std::span<double> out);

}  // namespace omp

// Dispatch on an execution policy.
void evaluate_scan(Execution exec, const DispersionEvaluator& eval, std::span<const double> grid,
                   std::span<double> out);
void polish_brackets(Execution exec, const DispersionEvaluator& eval,
                     std::span<const Bracket> brackets, int max_iterations,
                     std::span<PolishResult> out);
std::size_t secular_roots(Execution exec, const SecularProblem& problem,
                          std::span<const SecularInterval> intervals, int max_iterations,
                          std::span<double> out);

}  // namespace kernels
}  // namespace wellspec
