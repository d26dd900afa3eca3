#include <omp.h>

#include <cstdlib>

#include "kernel_ops.hpp"

namespace wellspec {

int apply_thread_cap_from_env() {
  if (const char* env = std::getenv("WELLSPEC_THREADS")) {
    const int requested = std::atoi(env);
    if (requested > 0) omp_set_num_threads(requested);
  }
  return omp_get_max_threads();
}

namespace kernels {

namespace omp {

void evaluate_scan(const DispersionEvaluator& eval, std::span<const double> grid,
                   std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = eval.scan_value(grid[i]);
}

void polish_brackets(const DispersionEvaluator& eval, std::span<const Bracket> brackets,
                     int max_iterations, std::span<PolishResult> out) {
  const auto n = static_cast<std::ptrdiff_t>(brackets.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = detail::polish_one(eval, brackets[i], max_iterations);
  }
}

void fill_rank_one_matrix(std::span<const double> diagonal, std::span<const double> v, double sigma,
                          std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(diagonal.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    detail::rank_one_row(diagonal, v, sigma, out, static_cast<std::size_t>(i));
  }
}

void householder_symv(std::span<const double> a, std::size_t n, std::size_t start,
                      std::span<const double> v, double beta, std::span<double> p) {
  const auto lo = static_cast<std::ptrdiff_t>(start);
  const auto hi = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = lo; i < hi; ++i) {
    detail::symv_row(a, n, start, v, beta, p, static_cast<std::size_t>(i));
  }
}

void householder_rank2(std::span<double> a, std::size_t n, std::size_t start,
                       std::span<const double> v, std::span<const double> w) {
  const auto lo = static_cast<std::ptrdiff_t>(start);
  const auto hi = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = lo; i < hi; ++i) {
    detail::rank2_row(a, n, start, v, w, static_cast<std::size_t>(i));
  }
}

std::size_t secular_roots(const SecularProblem& problem, std::span<const SecularInterval> intervals,
                          int max_iterations, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(intervals.size());
  std::size_t failures = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (!detail::secular_root_one(problem, intervals[i], max_iterations, out[i])) ++failures;
  }
  return failures;
}

}  // namespace omp

void evaluate_scan(Execution exec, const DispersionEvaluator& eval, std::span<const double> grid,
                   std::span<double> out) {
  if (exec == Execution::parallel) {
    omp::evaluate_scan(eval, grid, out);
  } else {
    serial::evaluate_scan(eval, grid, out);
  }
}

void polish_brackets(Execution exec, const DispersionEvaluator& eval,
                     std::span<const Bracket> brackets, int max_iterations,
                     std::span<PolishResult> out) {
  if (exec == Execution::parallel) {
    omp::polish_brackets(eval, brackets, max_iterations, out);
  } else {
    serial::polish_brackets(eval, brackets, max_iterations, out);
  }
}

std::size_t secular_roots(Execution exec, const SecularProblem& problem,
                          std::span<const SecularInterval> intervals, int max_iterations,
                          std::span<double> out) {
  if (exec == Execution::parallel) return omp::secular_roots(problem, intervals, max_iterations, out);
  return serial::secular_roots(problem, intervals, max_iterations, out);
}

}  // namespace kernels
}  // namespace wellspec
