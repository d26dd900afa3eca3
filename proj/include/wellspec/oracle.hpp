#pragma once

#include <cstddef>
#include <vector>

#include "wellspec/kernels.hpp"
#include "wellspec/model.hpp"
#include "wellspec/symmetric_eigen.hpp"

namespace wellspec {

/// Hamiltonian in the free-well basis sqrt(2) sin(m pi x), m = 1..M:
///   H = diag((m pi)^2) - sigma v v^T,  v_m = sin(m pi rho),  sigma = 2 lambda.
/// Stored in structured form; to_dense() materializes it.
class SineBasisMatrix {
 public:
  SineBasisMatrix(std::vector<double> diagonal, std::vector<double> coupling, double sigma);

  std::size_t size() const noexcept { return diagonal_.size(); }
  const std::vector<double>& diagonal() const noexcept { return diagonal_; }
  /// v_m; exactly zero on nodal rows of an exact position.
  const std::vector<double>& coupling() const noexcept { return coupling_; }
  double sigma() const noexcept { return sigma_; }

  double entry(std::size_t i, std::size_t j) const;
  SymmetricMatrix to_dense(Execution exec = Execution::serial) const;

 private:
  std::vector<double> diagonal_;
  std::vector<double> coupling_;
  double sigma_;
};

/// Throws std::invalid_argument for M < 2.
SineBasisMatrix build_matrix(const DimensionlessConfig& config, std::size_t M);
/// lambda = 0 gives the free well.
SineBasisMatrix build_matrix(const Position& position, double lambda, std::size_t M);

/// The `count` smallest eigenvalues, ascending. Decoupled rows contribute their
/// diagonal entry exactly; the rest come from the secular equation
///   1 = sigma sum_m v_m^2 / ((m pi)^2 - E),
/// one root per interlacing interval. Throws ConvergenceFailure.
std::vector<double> lowest_eigenvalues(const SineBasisMatrix& matrix, std::size_t count,
                                       Execution exec = Execution::serial);

std::vector<double> oracle_spectrum(const DimensionlessConfig& config, std::size_t count,
                                    std::size_t M, Execution exec = Execution::serial);

/// 2 E(2M) - E(M): removes the O(1/M) truncation error of the delta potential.
std::vector<double> extrapolated_spectrum(const DimensionlessConfig& config, std::size_t count,
                                          std::size_t M, Execution exec = Execution::serial);

}  // namespace wellspec
