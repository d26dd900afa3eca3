#include "kernel_ops.hpp"

namespace wellspec::kernels::serial {

void evaluate_scan(const DispersionEvaluator& eval, std::span<const double> grid,
                   std::span<double> out) {
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = eval.scan_value(grid[i]);
}

void polish_brackets(const DispersionEvaluator& eval, std::span<const Bracket> brackets,
                     int max_iterations, std::span<PolishResult> out) {
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    out[i] = detail::polish_one(eval, brackets[i], max_iterations);
  }
}

void fill_rank_one_matrix(std::span<const double> diagonal, std::span<const double> v, double sigma,
                          std::span<double> out) {
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    detail::rank_one_row(diagonal, v, sigma, out, i);
  }
}

void householder_symv(std::span<const double> a, std::size_t n, std::size_t start,
                      std::span<const double> v, double beta, std::span<double> p) {
  for (std::size_t i = start; i < n; ++i) detail::symv_row(a, n, start, v, beta, p, i);
}

void householder_rank2(std::span<double> a, std::size_t n, std::size_t start,
                       std::span<const double> v, std::span<const double> w) {
  for (std::size_t i = start; i < n; ++i) detail::rank2_row(a, n, start, v, w, i);
}

std::size_t secular_roots(const SecularProblem& problem, std::span<const SecularInterval> intervals,
                          int max_iterations, std::span<double> out) {
  std::size_t failures = 0;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (!detail::secular_root_one(problem, intervals[i], max_iterations, out[i])) ++failures;
  }
  return failures;
}

}  // namespace wellspec::kernels::serial
