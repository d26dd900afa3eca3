#include "wellspec/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wellspec/errors.hpp"

namespace wellspec {

Tridiagonal tridiagonalize(SymmetricMatrix a, Execution exec) {
  const std::size_t n = a.size();
  Tridiagonal t{std::vector<double>(n, 0.0), std::vector<double>(n > 0 ? n - 1 : 0, 0.0)};
  std::vector<double> v(n);
  std::vector<double> p(n);
  std::vector<double> w(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t start = k + 1;
    const std::size_t len = n - start;
    double norm = 0.0;
    for (std::size_t i = start; i < n; ++i) norm = std::hypot(norm, a(i, k));
    t.diagonal[k] = a(k, k);
    if (norm == 0.0) {
      t.off_diagonal[k] = 0.0;
      continue;
    }
    const double x0 = a(start, k);
    const double alpha = x0 > 0.0 ? -norm : norm;
    double vtv = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      v[i] = a(start + i, k);
      if (i == 0) v[i] -= alpha;
      vtv += v[i] * v[i];
    }
    t.off_diagonal[k] = alpha;
    const double beta = 2.0 / vtv;
    const std::span<const double> vs(v.data(), len);
    const std::span<double> ps(p.data(), len);
    if (exec == Execution::parallel) {
      kernels::omp::householder_symv(a.data(), n, start, vs, beta, ps);
    } else {
      kernels::serial::householder_symv(a.data(), n, start, vs, beta, ps);
    }
    double ptv = 0.0;
    for (std::size_t i = 0; i < len; ++i) ptv += p[i] * v[i];
    const double half = 0.5 * beta * ptv;
    for (std::size_t i = 0; i < len; ++i) w[i] = p[i] - half * v[i];
    const std::span<const double> ws(w.data(), len);
    if (exec == Execution::parallel) {
      kernels::omp::householder_rank2(a.data(), n, start, vs, ws);
    } else {
      kernels::serial::householder_rank2(a.data(), n, start, vs, ws);
    }
  }
  if (n >= 2) {
    t.diagonal[n - 2] = a(n - 2, n - 2);
    t.off_diagonal[n - 2] = a(n - 1, n - 2);
  }
  if (n >= 1) t.diagonal[n - 1] = a(n - 1, n - 1);
  return t;
}

std::vector<double> tridiagonal_eigenvalues(Tridiagonal t, int max_sweeps) {
  auto& d = t.diagonal;
  const std::size_t n = d.size();
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = t.off_diagonal[i];
  const double eps = std::numeric_limits<double>::epsilon();

  for (std::size_t l = 0; l < n; ++l) {
    int iterations = 0;
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (iterations++ == max_sweeps) {
        std::ostringstream msg;
        msg << "implicit QL did not converge for eigenvalue " << l << " after " << max_sweeps
            << " iterations (off-diagonal " << e[l] << ")";
        throw ConvergenceFailure(msg.str(), l, max_sweeps);
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> lowest_eigenvalues(const SymmetricMatrix& a, std::size_t count, Execution exec) {
  auto all = tridiagonal_eigenvalues(tridiagonalize(a, exec));
  all.resize(std::min(count, all.size()));
  return all;
}

}  // namespace wellspec
