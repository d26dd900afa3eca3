#include "wellspec/model.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "wellspec/errors.hpp"

namespace wellspec {

RationalPosition::RationalPosition(std::int64_t p, std::int64_t n) {
  if (p <= 0 || n <= 0 || p >= n) {
    throw PositionOutOfRange("position " + std::to_string(p) + "/" + std::to_string(n) +
                             " is not strictly inside the well");
  }
  const std::int64_t g = std::gcd(p, n);
  p_ = p / g;
  n_ = n / g;
}

double RationalPosition::value() const noexcept {
  return static_cast<double>(p_) / static_cast<double>(n_);
}

std::string RationalPosition::to_string() const {
  return std::to_string(p_) + "/" + std::to_string(n_);
}

RationalPosition reduce_position(std::int64_t p, std::int64_t n) { return {p, n}; }

RationalPosition parse_rational_position(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    throw PositionOutOfRange("expected P/N, got '" + text + "'");
  }
  auto parse = [&](std::string_view part) {
    std::int64_t value = 0;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, value);
    if (ec != std::errc() || ptr != end || part.empty()) {
      throw PositionOutOfRange("expected P/N, got '" + text + "'");
    }
    return value;
  };
  const std::string_view view(text);
  return {parse(view.substr(0, slash)), parse(view.substr(slash + 1))};
}

namespace {

double checked_rho(const Position& position) {
  if (const auto* exact = std::get_if<RationalPosition>(&position)) {
    return exact->value();
  }
  const double rho = std::get<double>(position);
  if (!(rho > 0.0 && rho < 1.0)) {
    std::ostringstream msg;
    msg << "position " << rho << " is not strictly inside the well";
    throw PositionOutOfRange(msg.str());
  }
  return rho;
}

}  // namespace

DimensionlessConfig::DimensionlessConfig(Position position, double f)
    : position_(position), rho_(checked_rho(position)), one_minus_rho_(0.0), f_(f) {
  if (f == 0.0 || !std::isfinite(f)) {
    throw InvalidCoupling("coupling f must be finite and nonzero");
  }
  if (const auto* exact = std::get_if<RationalPosition>(&position_)) {
    one_minus_rho_ = static_cast<double>(exact->denominator() - exact->numerator()) /
                     static_cast<double>(exact->denominator());
  } else {
    one_minus_rho_ = 1.0 - rho_;
  }
}

std::optional<RationalPosition> DimensionlessConfig::exact_position() const {
  if (const auto* exact = std::get_if<RationalPosition>(&position_)) return *exact;
  return std::nullopt;
}

DimensionlessConfig DimensionlessConfig::mirrored() const {
  if (const auto* exact = std::get_if<RationalPosition>(&position_)) {
    return {RationalPosition(exact->denominator() - exact->numerator(), exact->denominator()), f_};
  }
  return {1.0 - rho_, f_};
}

std::string DimensionlessConfig::describe() const {
  std::ostringstream out;
  out.precision(17);
  if (const auto* exact = std::get_if<RationalPosition>(&position_)) {
    out << "rho=" << exact->to_string();
  } else {
    out << "rho~" << rho_;
  }
  out << " f=" << f_;
  return out.str();
}

double mu(const DimensionlessConfig& config) { return config.rho() - config.one_minus_rho(); }

double sin_pi_ratio(std::int64_t a, std::int64_t b) {
  // sin(pi a/b) has period 2b in a.
  std::int64_t r = a % (2 * b);
  if (r < 0) r += 2 * b;
  if (r == 0 || r == b) return 0.0;
  double sign = 1.0;
  if (r > b) {
    r -= b;
    sign = -1.0;
  }
  // Fold into (0, b/2] so the argument stays in the first quadrant.
  if (2 * r > b) r = b - r;
  return sign * std::sin(kPi * static_cast<double>(r) / static_cast<double>(b));
}

}  // namespace wellspec
