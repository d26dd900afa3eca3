#include <doctest.h>

#include <cmath>
#include <random>

#include "wellspec/errors.hpp"
#include "wellspec/model.hpp"
#include "wellspec/spectrum.hpp"

using namespace wellspec;

TEST_CASE("reduce_position reduces by the gcd") {
  CHECK(reduce_position(2, 5) == RationalPosition(2, 5));
  const auto r = reduce_position(4, 10);
  CHECK(r.numerator() == 2);
  CHECK(r.denominator() == 5);
  CHECK_THROWS_AS(reduce_position(5, 5), PositionOutOfRange);
  CHECK_THROWS_AS(reduce_position(0, 5), PositionOutOfRange);
  CHECK_THROWS_AS(reduce_position(7, 3), PositionOutOfRange);
}

TEST_CASE("reduce_position is idempotent") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> den(2, 500);
  for (int i = 0; i < 500; ++i) {
    const auto n = den(rng);
    const auto p = std::uniform_int_distribution<std::int64_t>(1, n - 1)(rng);
    const auto once = reduce_position(p, n);
    const auto twice = reduce_position(once.numerator(), once.denominator());
    CHECK(once == twice);
    CHECK(std::gcd(once.numerator(), once.denominator()) == 1);
  }
}

TEST_CASE("parse_rational_position") {
  CHECK(parse_rational_position("2/5") == RationalPosition(2, 5));
  CHECK(parse_rational_position("83/200").value() == doctest::Approx(0.415));
  CHECK_THROWS_AS(parse_rational_position("2/"), PositionOutOfRange);
  CHECK_THROWS_AS(parse_rational_position("x"), PositionOutOfRange);
  CHECK_THROWS_AS(parse_rational_position("5/2"), PositionOutOfRange);
}

TEST_CASE("mu is 2 rho - 1") {
  CHECK(mu(DimensionlessConfig::exact(1, 2, 1.0)) == 0.0);
  CHECK(mu(DimensionlessConfig::exact(2, 5, 1.0)) == doctest::Approx(-0.2).epsilon(1e-15));
  CHECK(mu(DimensionlessConfig::generic(1.0 - 1e-12, 1.0)) == doctest::Approx(1.0));
}

TEST_CASE("mu is antisymmetric under mirroring") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pos(1e-6, 1.0 - 1e-6);
  for (int i = 0; i < 200; ++i) {
    const auto c = DimensionlessConfig::generic(pos(rng), 0.3);
    CHECK(std::abs(mu(c) + mu(c.mirrored())) < 1e-15);
  }
  const auto e = DimensionlessConfig::exact(2, 7, 0.3);
  CHECK(mu(e) + mu(e.mirrored()) == 0.0);
  CHECK(e.mirrored().exact_position() == RationalPosition(5, 7));
}

TEST_CASE("config validation and derived quantities") {
  CHECK_THROWS_AS(DimensionlessConfig::generic(0.0, 1.0), PositionOutOfRange);
  CHECK_THROWS_AS(DimensionlessConfig::generic(1.0, 1.0), PositionOutOfRange);
  CHECK_THROWS_AS(DimensionlessConfig::generic(0.5, 0.0), InvalidCoupling);
  CHECK_THROWS_AS(DimensionlessConfig::generic(0.5, INFINITY), InvalidCoupling);
  CHECK_THROWS_AS(DimensionlessConfig::generic(0.5, NAN), InvalidCoupling);
  const auto c = DimensionlessConfig::exact(2, 5, 0.25);
  CHECK(c.lambda() == 8.0);
  CHECK(c.binding_energy() == 16.0);
  CHECK(c.marginal_coupling() == doctest::Approx(0.48));
  CHECK(c.one_minus_rho() == 0.6);
}

TEST_CASE("sin_pi_ratio vanishes exactly on multiples of pi") {
  for (std::int64_t a = -20; a <= 20; ++a) CHECK(sin_pi_ratio(5 * a, 5) == 0.0);
  CHECK(sin_pi_ratio(1, 2) == 1.0);
  CHECK(sin_pi_ratio(3, 2) == -1.0);
  CHECK(sin_pi_ratio(2, 5) == doctest::Approx(std::sin(0.4 * kPi)));
}

TEST_CASE("exact and generic positions give the same ordinary energies") {
  // The exact position adds nodal entries; the generic one reports the same
  // values as ordinary roots (g vanishes there too). Everything else matches.
  for (double f : {-0.2, 0.05, 0.7, 3.0}) {
    const auto exact = DimensionlessConfig::exact(2, 5, f);
    const auto generic = DimensionlessConfig::generic(0.4, f);
    const auto se = full_spectrum(exact, 12.0 * kPi);
    const auto sg = full_spectrum(generic, 12.0 * kPi);
    std::vector<double> ordinary_exact;
    for (const auto& e : se.entries) {
      if (!e.is_nodal()) ordinary_exact.push_back(e.energy);
    }
    std::vector<double> ordinary_generic;
    std::vector<double> extras;
    for (const auto& e : sg.entries) {
      const double k = e.wavenumber();
      const bool near_nodal = !e.is_negative() && std::abs(k - 5.0 * kPi * std::round(k / (5.0 * kPi))) < 1e-6;
      (near_nodal ? extras : ordinary_generic).push_back(e.energy);
    }
    REQUIRE(ordinary_exact.size() == ordinary_generic.size());
    for (std::size_t i = 0; i < ordinary_exact.size(); ++i) {
      CHECK(std::abs(ordinary_exact[i] - ordinary_generic[i]) <= 1e-9 * std::max(1.0, std::abs(ordinary_exact[i])));
    }
    REQUIRE(extras.size() == se.nodal_count());
    for (std::size_t j = 0; j < extras.size(); ++j) {
      const double nodal = std::pow(5.0 * kPi * static_cast<double>(j + 1), 2);
      CHECK(std::abs(extras[j] - nodal) <= 1e-9 * nodal);
    }
  }
}
