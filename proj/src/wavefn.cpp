#include "wellspec/wavefn.hpp"

#include <cmath>
#include <sstream>

#include "wellspec/dispersion.hpp"
#include "wellspec/errors.hpp"

namespace wellspec {

namespace {

double sinc(double x) {
  if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

// sinh(x) / sinh(X) for 0 <= x <= X.
double sinh_ratio(double x, double X) {
  return std::exp(x - X) * (std::expm1(-2.0 * x) / std::expm1(-2.0 * X));
}

// cosh(x) / sinh(X) for 0 <= x <= X.
double cosh_sinh_ratio(double x, double X) {
  return std::exp(x - X) * ((1.0 + std::exp(-2.0 * x)) / -std::expm1(-2.0 * X));
}

double coth(double x) { return 1.0 / std::tanh(x); }

// 1 / sinh(x)^2 without overflow.
double csch_squared(double x) {
  const double e = std::exp(-2.0 * x);
  const double d = -std::expm1(-2.0 * x);
  return 4.0 * e / (d * d);
}

// integral_0^T sinh(r t)^2 dt / sinh(r T)^2, as T * h(r T).
double sinh_sinh_same(double r, double T) {
  const double x = r * T;
  if (x < 1e-2) {
    const double x2 = x * x;
    return T * (1.0 / 3.0 - 2.0 * x2 / 45.0 + 2.0 * x2 * x2 / 315.0);
  }
  return coth(x) / (2.0 * r) - 0.5 * T * csch_squared(x);
}

// integral_0^T (t/T) sinh(r t) / sinh(r T) dt.
double linear_sinh(double r, double T) {
  const double x = r * T;
  if (x < 1e-2) {
    const double x2 = x * x;
    return T * (1.0 / 3.0 - x2 / 45.0 + 2.0 * x2 * x2 / 945.0);
  }
  return coth(x) / r - 1.0 / (r * r * T);
}

double sine_sine(double a, double b, double T) {
  return 0.5 * T * (sinc((a - b) * T) - sinc((a + b) * T));
}

double sine_sinh(double a, double r, double T) {
  return (r * std::sin(a * T) * coth(r * T) - a * std::cos(a * T)) / (a * a + r * r);
}

double sinh_sinh(double r1, double r2, double T) {
  if (std::abs(r1 - r2) <= 1e-8 * std::max(r1, r2)) return sinh_sinh_same(0.5 * (r1 + r2), T);
  return (r1 * coth(r1 * T) - r2 * coth(r2 * T)) / (r1 * r1 - r2 * r2);
}

double sine_linear(double a, double T) {
  return (std::sin(a * T) / (a * a) - T * std::cos(a * T) / a) / T;
}

void normalize(PiecewiseWave& w) {
  const double norm_sq =
      w.left.coef * w.left.coef *
          segment_overlap(w.left.basis, w.left.rate, w.left.basis, w.left.rate, w.left.length) +
      w.right.coef * w.right.coef *
          segment_overlap(w.right.basis, w.right.rate, w.right.basis, w.right.rate, w.right.length);
  if (!(norm_sq > 0.0) || !std::isfinite(norm_sq)) {
    throw InconsistentState("wave has no normalizable amplitude");
  }
  double scale = 1.0 / std::sqrt(norm_sq);
  // psi'(0+) > 0; fall back to the right segment when the left one is empty.
  const double lead = w.left.coef != 0.0 ? w.left.coef : w.right.coef;
  if (lead < 0.0) scale = -scale;
  w.left.coef *= scale;
  w.right.coef *= scale;
  w.norm = std::abs(scale);
}

PiecewiseWave make_wave(WaveKind kind, const DimensionlessConfig& config, Basis basis, double rate,
                        double left_coef, double right_coef) {
  PiecewiseWave w{kind,
                  config.rho(),
                  Segment{basis, rate, config.rho(), left_coef},
                  Segment{basis, rate, config.one_minus_rho(), right_coef},
                  1.0};
  normalize(w);
  return w;
}

std::int64_t parity_sign(std::int64_t m) { return m % 2 == 0 ? 1 : -1; }

}  // namespace

double Segment::value(double t) const {
  if (t == 0.0) return 0.0;
  switch (basis) {
    case Basis::sine: return coef * std::sin(rate * t);
    case Basis::sinh_scaled: return coef * sinh_ratio(rate * t, rate * length);
    case Basis::linear_scaled: return coef * (t / length);
  }
  return 0.0;
}

double Segment::slope(double t) const {
  switch (basis) {
    case Basis::sine: return coef * rate * std::cos(rate * t);
    case Basis::sinh_scaled: return coef * rate * cosh_sinh_ratio(rate * t, rate * length);
    case Basis::linear_scaled: return coef / length;
  }
  return 0.0;
}

double segment_overlap(Basis a, double rate_a, Basis b, double rate_b, double length) {
  if (a > b) {
    std::swap(a, b);
    std::swap(rate_a, rate_b);
  }
  const double T = length;
  switch (a) {
    case Basis::sine:
      switch (b) {
        case Basis::sine: return sine_sine(rate_a, rate_b, T);
        case Basis::sinh_scaled: return sine_sinh(rate_a, rate_b, T);
        case Basis::linear_scaled: return sine_linear(rate_a, T);
      }
      break;
    case Basis::sinh_scaled:
      if (b == Basis::sinh_scaled) return sinh_sinh(rate_a, rate_b, T);
      return linear_sinh(rate_a, T);
    case Basis::linear_scaled: return T / 3.0;
  }
  return 0.0;
}

PiecewiseWave oscillatory_wave(double kL, const DimensionlessConfig& config) {
  // Amplitudes (A, B) of A sin(kx), B sin(k(1-x)) span the null space of
  //   continuity: A sin(k rho) - B sin(k(1-rho)) = 0
  //   jump:       A (lambda sin(k rho) - k cos(k rho)) - B k cos(k(1-rho)) = 0
  // whose determinant is -g/f. Take the better-scaled row: continuity alone
  // degenerates when both sines vanish (a generic position at a nodal value).
  const double sa = std::sin(kL * config.rho());
  const double sb = std::sin(kL * config.one_minus_rho());
  const double ca = std::cos(kL * config.rho());
  const double cb = std::cos(kL * config.one_minus_rho());
  const double j1 = config.lambda() * sa - kL * ca;
  const double j2 = -kL * cb;
  const double continuity_weight = std::hypot(sa, sb);
  const double jump_weight = std::hypot(j1, j2) / (kL + std::abs(config.lambda()));
  if (continuity_weight >= jump_weight) {
    return make_wave(WaveKind::oscillatory, config, Basis::sine, kL, sb, sa);
  }
  return make_wave(WaveKind::oscillatory, config, Basis::sine, kL, -j2, j1);
}

PiecewiseWave evanescent_wave(double kappaL, const DimensionlessConfig& config) {
  return make_wave(WaveKind::evanescent, config, Basis::sinh_scaled, kappaL, 1.0, 1.0);
}

PiecewiseWave nodal_wave(const Nodal& state, const DimensionlessConfig& config) {
  const double nu = static_cast<double>(state.j * state.n) * kPi;
  // sin(nu x) = -cos(nu) sin(nu (1 - x)) with nu a multiple of pi.
  const double right = static_cast<double>(-parity_sign(state.j * state.n));
  return make_wave(WaveKind::nodal, config, Basis::sine, nu, 1.0, right);
}

PiecewiseWave threshold_wave(const DimensionlessConfig& config) {
  return make_wave(WaveKind::threshold, config, Basis::linear_scaled, 0.0, 1.0, 1.0);
}

PiecewiseWave coupling_limit_wave(const RationalPosition& pos, std::int64_t j) {
  const std::int64_t p = pos.numerator();
  const std::int64_t n = pos.denominator();
  // Any finite f keeps the config well-formed; the shape does not depend on it.
  const DimensionlessConfig config(pos, 1.0);
  const double nu = static_cast<double>(j * n) * kPi;
  const double left = static_cast<double>(parity_sign(j * (n - p))) * config.one_minus_rho();
  const double right = static_cast<double>(parity_sign(j * p)) * config.rho();
  return make_wave(WaveKind::coupling_limit, config, Basis::sine, nu, left, right);
}

PiecewiseWave build_wave(const EigenState& state, const DimensionlessConfig& config, double tol) {
  if (const auto* nodal = std::get_if<Nodal>(&state.kind)) {
    const auto exact = config.exact_position();
    if (!exact || exact->denominator() != nodal->n || nodal->j < 1) {
      throw InconsistentState("nodal state does not belong to " + config.describe());
    }
    return nodal_wave(*nodal, config);
  }
  if (const auto* pos = std::get_if<OrdinaryPositive>(&state.kind)) {
    if (pos->kL == 0.0) {
      if (config.f() != config.marginal_coupling()) {
        throw InconsistentState("zero-energy state requires f = 2 rho (1 - rho) for " +
                                config.describe());
      }
      return threshold_wave(config);
    }
    const double residual = std::abs(dispersion_residual(pos->kL, config));
    if (residual > certificate_tolerance(pos->kL, config, tol)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "kL=" << pos->kL << " is not a root for " << config.describe() << " (residual "
          << residual << ")";
      throw InconsistentState(msg.str());
    }
    return oscillatory_wave(pos->kL, config);
  }
  const double kappa = std::get<OrdinaryNegative>(state.kind).kappaL;
  const double residual = std::abs(negative_residual(kappa, config));
  if (!(kappa > 0.0) || residual > certificate_tolerance(kappa, config, tol)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "kappaL=" << kappa << " is not a root for " << config.describe() << " (residual "
        << residual << ")";
    throw InconsistentState(msg.str());
  }
  return evanescent_wave(kappa, config);
}

double evaluate(const PiecewiseWave& wave, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << "evaluation point " << x << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  if (x == 0.0 || x == 1.0) return 0.0;
  if (x <= wave.rho) return wave.left.value(x);
  return wave.right.value(1.0 - x);
}

double derivative(const PiecewiseWave& wave, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << "evaluation point " << x << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  if (x <= wave.rho) return wave.left.slope(x);
  return -wave.right.slope(1.0 - x);
}

double inner_product(const PiecewiseWave& a, const PiecewiseWave& b) {
  if (a.rho != b.rho) throw DomainError("inner product of waves with different junctions");
  const double left =
      a.left.coef * b.left.coef *
      segment_overlap(a.left.basis, a.left.rate, b.left.basis, b.left.rate, a.left.length);
  const double right =
      a.right.coef * b.right.coef *
      segment_overlap(a.right.basis, a.right.rate, b.right.basis, b.right.rate, a.right.length);
  return left + right;
}

MatchingDefect matching_defect(const PiecewiseWave& wave, const DimensionlessConfig& config) {
  const double value_left = wave.left.value(wave.left.length);
  const double value_right = wave.right.value(wave.right.length);
  const double slope_left = wave.left.slope(wave.left.length);
  const double slope_right = -wave.right.slope(wave.right.length);
  return {std::abs(value_right - value_left),
          std::abs(slope_right - slope_left + config.lambda() * value_left)};
}

}  // namespace wellspec
