#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wellspec/kernels.hpp"

namespace wellspec {

/// Dense real symmetric matrix, row-major. Only the full storage is kept;
/// callers are responsible for filling both triangles.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

struct Tridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // size n - 1
};

/// Householder reduction to tridiagonal form. The matrix is consumed.
Tridiagonal tridiagonalize(SymmetricMatrix a, Execution exec = Execution::serial);

/// All eigenvalues of a symmetric tridiagonal matrix, ascending, by implicit QL
/// with Wilkinson shifts. Throws ConvergenceFailure when an eigenvalue needs more
/// than max_sweeps iterations.
std::vector<double> tridiagonal_eigenvalues(Tridiagonal t, int max_sweeps = 60);

/// The `count` smallest eigenvalues, ascending.
std::vector<double> lowest_eigenvalues(const SymmetricMatrix& a, std::size_t count,
                                       Execution exec = Execution::serial);

}  // namespace wellspec
