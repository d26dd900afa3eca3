#include "wellspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

#include "wellspec/errors.hpp"

namespace wellspec {

double EigenState::wavenumber() const noexcept {
  return std::visit(
      [](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Nodal>) {
          return static_cast<double>(k.j * k.n) * kPi;
        } else if constexpr (std::is_same_v<T, OrdinaryPositive>) {
          return k.kL;
        } else {
          return k.kappaL;
        }
      },
      kind);
}

std::string_view EigenState::label() const noexcept {
  switch (kind.index()) {
    case 0: return "Nodal";
    case 1: return "OrdinaryPositive";
    default: return "OrdinaryNegative";
  }
}

std::vector<double> Spectrum::energies() const {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.energy);
  return out;
}

std::size_t Spectrum::nodal_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const EigenState& e) { return e.is_nodal(); }));
}

std::vector<double> scan_grid(double k_max, const SolverOptions& opts) {
  std::vector<double> grid;
  if (!(k_max > 0.0)) return grid;
  const auto spp = static_cast<std::int64_t>(std::max(1, opts.samples_per_pi));
  const auto refine = static_cast<std::int64_t>(std::max(1, opts.refine_factor));
  const double h = kPi / static_cast<double>(spp);
  const double fine = h / static_cast<double>(refine);
  const auto cells = static_cast<std::int64_t>(std::ceil(k_max / h));
  grid.reserve(static_cast<std::size_t>(cells + 64 * refine));
  for (std::int64_t i = 0; i < cells; ++i) {
    const double left = static_cast<double>(i) * h;
    const double right = static_cast<double>(i + 1) * h;
    const double nearest = std::round((left + 0.5 * h) / kPi) * kPi;
    const double distance = std::max({0.0, left - nearest, nearest - right});
    const std::int64_t steps = distance < opts.refine_halfwidth ? refine : 1;
    for (std::int64_t t = 1; t <= steps; ++t) {
      const double x = steps == 1 ? right : static_cast<double>(i * refine + t) * fine;
      if (x >= k_max) break;
      grid.push_back(x);
    }
  }
  grid.push_back(k_max);
  return grid;
}

std::vector<EigenState> enumerate_nodal(const RationalPosition& pos, double k_max) {
  std::vector<EigenState> out;
  const std::int64_t n = pos.denominator();
  for (std::int64_t j = 1;; ++j) {
    const double kL = static_cast<double>(j * n) * kPi;
    if (kL > k_max) break;
    out.push_back({Nodal{n, j}, kL * kL, 0.0});
  }
  return out;
}

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

std::vector<EigenState> ordinary_roots(const DimensionlessConfig& config, double k_max,
                                       const SolverOptions& opts, std::size_t* merged) {
  const DispersionEvaluator eval(config, k_max);
  const auto grid = scan_grid(k_max, opts);
  std::vector<double> values(grid.size());
  kernels::evaluate_scan(opts.execution, eval, grid, values);

  std::vector<kernels::Bracket> brackets;
  std::vector<double> exact_hits;
  double prev_k = 0.0;
  int prev_sign = eval.sign_at_zero();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const int s = sign_of(values[i]);
    if (s == 0) {
      exact_hits.push_back(grid[i]);
    } else {
      if (prev_sign != 0 && s != prev_sign) brackets.push_back({prev_k, grid[i], prev_sign});
    }
    prev_k = grid[i];
    prev_sign = s;
  }

  std::vector<kernels::PolishResult> polished(brackets.size());
  kernels::polish_brackets(opts.execution, eval, brackets, opts.max_iterations, polished);

  std::vector<double> roots = exact_hits;
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    auto& r = polished[i];
    if (r.root == 0.0) r.root = brackets[i].hi;
    const double tol = certificate_tolerance(r.root, config, opts.residual_tol);
    if (!r.converged || std::abs(eval.residual(r.root)) > tol) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "ordinary root in bracket [" << brackets[i].lo << ", " << brackets[i].hi
          << "] failed to certify (" << config.describe() << ", residual "
          << std::abs(eval.residual(r.root)) << ", tolerance " << tol << ")";
      throw SolverFailure(msg.str(), brackets[i].lo, brackets[i].hi);
    }
    roots.push_back(r.root);
  }
  std::sort(roots.begin(), roots.end());

  std::vector<EigenState> out;
  out.reserve(roots.size());
  const auto exact = config.exact_position();
  for (double k : roots) {
    if (exact) {
      const double n_pi = static_cast<double>(exact->denominator()) * kPi;
      const double nearest = std::round(k / n_pi) * n_pi;
      if (nearest > 0.0 && std::abs(k - nearest) <= opts.degeneracy_tol) {
        if (merged) ++*merged;
        continue;
      }
    }
    out.push_back({OrdinaryPositive{k}, k * k, std::abs(eval.residual(k))});
  }
  return out;
}

EigenState threshold_state() { return {OrdinaryPositive{0.0}, 0.0, 0.0}; }

bool at_threshold(const DimensionlessConfig& config) {
  return config.f() == config.marginal_coupling();
}

}  // namespace

std::vector<EigenState> find_ordinary_positive(const DimensionlessConfig& config, double k_max,
                                               const SolverOptions& opts) {
  return ordinary_roots(config, k_max, opts, nullptr);
}

std::optional<EigenState> find_negative_root(const DimensionlessConfig& config,
                                             const SolverOptions& opts) {
  const double f = config.f();
  if (!(f > 0.0 && f < config.marginal_coupling())) return std::nullopt;

  double lo = 0.0;
  double hi = 4.0 * std::max(1.0, 1.0 / f);
  if (negative_residual(hi, config) <= 0.0) {
    throw SolverFailure("negative-energy bracket has no sign change (" + config.describe() + ")",
                        lo, hi);
  }
  // negative_residual ~ (f - 2 rho (1 - rho)) kappaL < 0 as kappaL -> 0+.
  bool converged = false;
  for (int it = 0; it < opts.max_iterations; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) {
      converged = true;
      break;
    }
    const double v = negative_residual(mid, config);
    if (v == 0.0) {
      lo = hi = mid;
      converged = true;
      break;
    }
    (v < 0.0 ? lo : hi) = mid;
  }
  const double r_lo = lo > 0.0 ? std::abs(negative_residual(lo, config)) : INFINITY;
  const double r_hi = std::abs(negative_residual(hi, config));
  const double kappa = r_lo <= r_hi ? lo : hi;
  const double residual = std::min(r_lo, r_hi);
  if (!converged || residual > certificate_tolerance(kappa, config, opts.residual_tol)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "negative-energy root failed to certify near kappaL=" << kappa << " ("
        << config.describe() << ")";
    throw SolverFailure(msg.str(), lo, hi);
  }
  const double energy = -kappa * kappa;
  if (!std::isfinite(energy)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "negative energy overflows at kappaL=" << kappa << " (" << config.describe() << ")";
    throw SolverFailure(msg.str(), lo, hi);
  }
  return EigenState{OrdinaryNegative{kappa}, energy, residual};
}

EigenState ground_state(const DimensionlessConfig& config, const SolverOptions& opts) {
  if (auto negative = find_negative_root(config, opts)) return *negative;
  if (at_threshold(config)) return threshold_state();

  // The lowest ordinary root lies below the split-well bound pi / max(rho, 1 - rho) <= 2 pi,
  // and no nodal value is smaller than 2 pi.
  const double k_max = 2.0 * kPi + opts.refine_halfwidth;
  std::vector<EigenState> candidates = find_ordinary_positive(config, k_max, opts);
  if (const auto exact = config.exact_position()) {
    for (auto& s : enumerate_nodal(*exact, k_max)) candidates.push_back(s);
  }
  if (candidates.empty()) {
    const auto full = full_spectrum(config, kDefaultKMax, opts);
    if (full.entries.empty()) {
      throw SolverFailure("no eigenvalue found below the default ceiling (" + config.describe() + ")",
                          0.0, kDefaultKMax);
    }
    return full.entries.front();
  }
  return *std::min_element(candidates.begin(), candidates.end(),
                           [](const EigenState& a, const EigenState& b) { return a.energy < b.energy; });
}

std::vector<double> ground_state_energies(std::span<const DimensionlessConfig> configs,
                                          const SolverOptions& opts) {
  std::vector<double> out(configs.size());
  SolverOptions inner = opts;
  inner.execution = Execution::serial;
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(configs.size());
  if (opts.execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        out[i] = ground_state(configs[i], inner).energy;
      } catch (...) {
#pragma omp critical(wellspec_ground_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = ground_state(configs[i], inner).energy;
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

Spectrum full_spectrum(const DimensionlessConfig& config, double k_max, const SolverOptions& opts) {
  Spectrum spectrum{config, {}, k_max, 0};
  auto& entries = spectrum.entries;
  if (const auto exact = config.exact_position()) entries = enumerate_nodal(*exact, k_max);
  for (auto& s : ordinary_roots(config, k_max, opts, &spectrum.merged_near_nodal)) {
    entries.push_back(s);
  }
  if (auto negative = find_negative_root(config, opts)) entries.push_back(*negative);
  if (at_threshold(config)) entries.push_back(threshold_state());
  std::sort(entries.begin(), entries.end(),
            [](const EigenState& a, const EigenState& b) { return a.energy < b.energy; });
  return spectrum;
}

double weak_coupling_estimate(std::int64_t N, const DimensionlessConfig& config) {
  double s = 0.0;
  if (const auto exact = config.exact_position()) {
    s = sin_pi_ratio(N * exact->numerator(), exact->denominator());
  } else {
    s = std::sin(static_cast<double>(N) * kPi * config.rho());
  }
  const double n_pi = static_cast<double>(N) * kPi;
  return n_pi - 2.0 * s * s / (n_pi * config.f());
}

std::vector<double> strong_coupling_estimates(const DimensionlessConfig& config, std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  std::int64_t n1 = 1;
  std::int64_t n2 = 1;
  // At rho = 1/2 the two ladders coincide everywhere and nothing survives.
  const auto limit = static_cast<std::int64_t>(4 * count + 16);
  if (const auto exact = config.exact_position()) {
    const std::int64_t p = exact->numerator();
    const std::int64_t n = exact->denominator();
    // Ladder (a): kL/pi = n1 n / p, ladder (b): kL/pi = n2 n / (n - p).
    while (out.size() < count && n1 + n2 < limit) {
      const std::int64_t lhs = n1 * (n - p);
      const std::int64_t rhs = n2 * p;
      if (lhs < rhs) {
        out.push_back(kPi * static_cast<double>(n1 * n) / static_cast<double>(p));
        ++n1;
      } else if (rhs < lhs) {
        out.push_back(kPi * static_cast<double>(n2 * n) / static_cast<double>(n - p));
        ++n2;
      } else {
        // Both walls at once: the wave would vanish at the delta, which is a nodal state.
        ++n1;
        ++n2;
      }
    }
    return out;
  }
  while (out.size() < count && n1 + n2 < limit) {
    const double a = static_cast<double>(n1) * kPi / config.rho();
    const double b = static_cast<double>(n2) * kPi / config.one_minus_rho();
    if (std::abs(a - b) <= 1e-9 * std::max(1.0, a)) {
      ++n1;
      ++n2;
    } else if (a < b) {
      out.push_back(a);
      ++n1;
    } else {
      out.push_back(b);
      ++n2;
    }
  }
  return out;
}

std::vector<double> zero_energy_positions(double f) {
  if (f == 0.5) return {0.5};
  if (!(f > 0.0 && f < 0.5)) return {};
  const double root = std::sqrt(1.0 - 2.0 * f);
  return {0.5 * (1.0 - root), 0.5 * (1.0 + root)};
}

double near_wall_energy(std::int64_t N, double eps, double f) {
  const double n_pi = static_cast<double>(N) * kPi;
  return n_pi * n_pi * (1.0 - 4.0 * eps * eps / f);
}

}  // namespace wellspec
