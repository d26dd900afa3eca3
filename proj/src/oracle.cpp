#include "wellspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wellspec/errors.hpp"

namespace wellspec {

namespace {

constexpr int kSecularIterations = 400;

}  // namespace

SineBasisMatrix::SineBasisMatrix(std::vector<double> diagonal, std::vector<double> coupling,
                                 double sigma)
    : diagonal_(std::move(diagonal)), coupling_(std::move(coupling)), sigma_(sigma) {
  if (diagonal_.size() != coupling_.size()) {
    throw std::invalid_argument("diagonal and coupling sizes differ");
  }
}

double SineBasisMatrix::entry(std::size_t i, std::size_t j) const {
  const double potential = -sigma_ * (coupling_[i] * coupling_[j]);
  return i == j ? diagonal_[i] + potential : potential;
}

SymmetricMatrix SineBasisMatrix::to_dense(Execution exec) const {
  SymmetricMatrix out(size());
  if (exec == Execution::parallel) {
    kernels::omp::fill_rank_one_matrix(diagonal_, coupling_, sigma_, out.data());
  } else {
    kernels::serial::fill_rank_one_matrix(diagonal_, coupling_, sigma_, out.data());
  }
  return out;
}

SineBasisMatrix build_matrix(const Position& position, double lambda, std::size_t M) {
  if (M < 2) throw std::invalid_argument("sine basis needs at least 2 functions");
  std::vector<double> d(M);
  std::vector<double> v(M);
  for (std::size_t i = 0; i < M; ++i) {
    const auto m = static_cast<std::int64_t>(i + 1);
    const double m_pi = static_cast<double>(m) * kPi;
    d[i] = m_pi * m_pi;
    if (const auto* exact = std::get_if<RationalPosition>(&position)) {
      v[i] = sin_pi_ratio(m * exact->numerator(), exact->denominator());
    } else {
      v[i] = std::sin(m_pi * std::get<double>(position));
    }
  }
  return SineBasisMatrix(std::move(d), std::move(v), 2.0 * lambda);
}

SineBasisMatrix build_matrix(const DimensionlessConfig& config, std::size_t M) {
  return build_matrix(config.position(), config.lambda(), M);
}

std::vector<double> lowest_eigenvalues(const SineBasisMatrix& matrix, std::size_t count,
                                       Execution exec) {
  const auto& d = matrix.diagonal();
  const auto& v = matrix.coupling();
  const double sigma = matrix.sigma();
  count = std::min(count, matrix.size());

  double v_norm = 0.0;
  for (double x : v) v_norm = std::hypot(v_norm, x);
  const double cutoff = 8.0 * std::numeric_limits<double>::epsilon() * v_norm;

  std::vector<double> values;
  std::vector<double> active_d;
  std::vector<double> active_w;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (sigma == 0.0 || std::abs(v[i]) <= cutoff) {
      values.push_back(d[i]);
    } else {
      active_d.push_back(d[i]);
      active_w.push_back(v[i] * v[i]);
    }
  }

  if (!active_d.empty()) {
    double w_sum = 0.0;
    for (double w : active_w) w_sum += w;
    const double reach = std::abs(sigma) * w_sum;
    const std::size_t k = active_d.size();
    std::vector<kernels::SecularInterval> intervals;
    if (sigma > 0.0) {
      intervals.push_back({active_d[0] - reach, active_d[0], false, true});
      for (std::size_t i = 0; i + 1 < k; ++i) {
        intervals.push_back({active_d[i], active_d[i + 1], true, true});
      }
    } else {
      for (std::size_t i = 0; i + 1 < k; ++i) {
        intervals.push_back({active_d[i], active_d[i + 1], true, true});
      }
      intervals.push_back({active_d[k - 1], active_d[k - 1] + reach, true, false});
    }
    // Only the lowest `count` roots can reach the requested part of the spectrum.
    intervals.resize(std::min(intervals.size(), count));
    std::vector<double> roots(intervals.size());
    const kernels::SecularProblem problem{active_d, active_w, sigma};
    const std::size_t failures =
        kernels::secular_roots(exec, problem, intervals, kSecularIterations, roots);
    if (failures > 0) {
      throw ConvergenceFailure("secular equation bisection did not converge", failures,
                               kSecularIterations);
    }
    values.insert(values.end(), roots.begin(), roots.end());
  }

  std::sort(values.begin(), values.end());
  values.resize(count);
  return values;
}

std::vector<double> oracle_spectrum(const DimensionlessConfig& config, std::size_t count,
                                    std::size_t M, Execution exec) {
  return lowest_eigenvalues(build_matrix(config, M), count, exec);
}

std::vector<double> extrapolated_spectrum(const DimensionlessConfig& config, std::size_t count,
                                          std::size_t M, Execution exec) {
  const auto coarse = oracle_spectrum(config, count, M, exec);
  const auto fine = oracle_spectrum(config, count, 2 * M, exec);
  std::vector<double> out(coarse.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 2.0 * fine[i] - coarse[i];
  return out;
}

}  // namespace wellspec
