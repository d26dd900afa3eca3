#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "wellspec/errors.hpp"
#include "wellspec/oracle.hpp"
#include "wellspec/symmetric_eigen.hpp"

using namespace wellspec;

namespace {

// Q diag(values) Q^T with Q a product of random Householder reflections.
SymmetricMatrix with_spectrum(const std::vector<double>& values, unsigned seed) {
  const std::size_t n = values.size();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> q(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) q[i * n + i] = 1.0;
  for (int r = 0; r < 3; ++r) {
    std::vector<double> u(n);
    double norm = 0.0;
    for (auto& x : u) {
      x = normal(rng);
      norm += x * x;
    }
    norm = std::sqrt(norm);
    for (auto& x : u) x /= norm;
    // q <- q (I - 2 u u^T)
    for (std::size_t i = 0; i < n; ++i) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += q[i * n + k] * u[k];
      for (std::size_t k = 0; k < n; ++k) q[i * n + k] -= 2.0 * dot * u[k];
    }
  }
  SymmetricMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += q[i * n + k] * values[k] * q[j * n + k];
      a(i, j) = s;
      a(j, i) = s;
    }
  }
  return a;
}

}  // namespace

TEST_CASE("diagonal matrix") {
  SymmetricMatrix a(3);
  a(0, 0) = 9.0;
  a(1, 1) = 1.0;
  a(2, 2) = 4.0;
  const auto lowest = lowest_eigenvalues(a, 2);
  REQUIRE(lowest.size() == 2);
  CHECK(lowest[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lowest[1] == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("2x2 closed form") {
  SymmetricMatrix a(2);
  a(0, 0) = 2.0;
  a(1, 1) = -1.0;
  a(0, 1) = a(1, 0) = 3.0;
  const auto all = tridiagonal_eigenvalues(tridiagonalize(a));
  const double mean = 0.5, radius = std::sqrt(1.5 * 1.5 + 9.0);
  CHECK(all[0] == doctest::Approx(mean - radius).epsilon(1e-14));
  CHECK(all[1] == doctest::Approx(mean + radius).epsilon(1e-14));
}

TEST_CASE("property: a rotated known spectrum is recovered") {
  for (unsigned seed : {1u, 2u, 3u}) {
    std::vector<double> values(100);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    for (auto& v : values) v = u(rng);
    const auto a = with_spectrum(values, seed);
    std::sort(values.begin(), values.end());
    for (Execution exec : {Execution::serial, Execution::parallel}) {
      const auto got = lowest_eigenvalues(a, values.size(), exec);
      REQUIRE(got.size() == values.size());
      for (std::size_t i = 0; i < values.size(); ++i) {
        CHECK(std::abs(got[i] - values[i]) < 1e-12 * 50.0);
      }
    }
  }
}

TEST_CASE("serial and parallel tridiagonalization agree bitwise") {
  std::vector<double> values(64);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = static_cast<double>(i * i) - 30.0;
  const auto a = with_spectrum(values, 9);
  const auto s = tridiagonalize(a, Execution::serial);
  const auto p = tridiagonalize(a, Execution::parallel);
  CHECK(s.diagonal == p.diagonal);
  CHECK(s.off_diagonal == p.off_diagonal);
}

TEST_CASE("dense route agrees with the secular route on the sine-basis Hamiltonian") {
  for (const auto& config :
       {DimensionlessConfig::exact(2, 5, 0.3), DimensionlessConfig::generic(0.3183, -0.7),
        DimensionlessConfig::exact(1, 2, 0.1)}) {
    const auto h = build_matrix(config, 200);
    const auto secular = lowest_eigenvalues(h, 10);
    const auto dense = lowest_eigenvalues(h.to_dense(Execution::parallel), 10, Execution::parallel);
    for (std::size_t i = 0; i < 10; ++i) {
      CHECK(std::abs(secular[i] - dense[i]) < 1e-11 * std::max(1.0, std::abs(secular[i])) * 200.0);
    }
  }
}

TEST_CASE("QL with no sweeps allowed reports non-convergence") {
  Tridiagonal t{{1.0, 2.0, 3.0}, {0.5, 0.5}};
  CHECK_THROWS_AS(tridiagonal_eigenvalues(t, 0), ConvergenceFailure);
  CHECK_NOTHROW(tridiagonal_eigenvalues(Tridiagonal{{1.0, 2.0}, {0.0}}, 0));
}
