#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "twostate/core_model.hpp"
#include "twostate/errors.hpp"

using namespace twostate;
using std::numbers::pi;

TEST_CASE("amplitudes start in the first reference state") {
  for (double omega : {0.0, 0.3, 7.0}) {
    const auto a = amplitudes_at(ExchangeFrequency(omega), 0.0);
    CHECK(a.c1 == Complex(1.0, 0.0));
    CHECK(std::abs(a.c2) == 0.0);
  }
}

TEST_CASE("amplitudes at a quarter and an eighth of the exchange period") {
  const ExchangeFrequency one(1.0);
  auto a = amplitudes_at(one, pi / 2);
  CHECK(std::abs(a.c1) < 1e-15);
  CHECK(a.c2.real() == 0.0);
  CHECK(a.c2.imag() == doctest::Approx(-1.0).epsilon(1e-15));

  a = amplitudes_at(one, pi / 4);
  CHECK(a.c1.real() == doctest::Approx(0.7071068).epsilon(1e-7));
  CHECK(a.c2.imag() == doctest::Approx(-0.7071068).epsilon(1e-7));
}

TEST_CASE("zero exchange frequency freezes the state") {
  const auto a = amplitudes_at(ExchangeFrequency(0.0), 123.0);
  CHECK(a.c1 == Complex(1.0, 0.0));
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(ExchangeFrequency{-1.0}, InvalidInput);
  CHECK_THROWS_AS(ExchangeFrequency{std::nan("")}, InvalidInput);
  CHECK_THROWS_AS(ExchangeFrequency{INFINITY}, InvalidInput);
  CHECK_THROWS_AS(amplitudes_at(ExchangeFrequency(1.0), -0.1), InvalidInput);
  CHECK_THROWS_AS(amplitudes_at(ExchangeFrequency(1.0), std::nan("")), InvalidInput);
  CHECK_THROWS_AS(CapacityOperator(0.0, 1.0, 0.0, 0.0), InvalidInput);
  CHECK_THROWS_AS(CapacityOperator(1.0, -1.0, 0.0, 0.0), InvalidInput);
  CHECK_THROWS_AS(CapacityOperator(1.0, 1.0, -0.1, 0.0), InvalidInput);
  CHECK_THROWS_AS(CapacityOperator(1.0, 1.0, 1.0 + 1e-12, 0.0), InvalidInput);
  CHECK_THROWS_AS(CapacityOperator(1.0, 1.0, 1.0, INFINITY), InvalidInput);
  CHECK_NOTHROW(CapacityOperator(2.0, 0.5, 1.0, 0.0));
}

TEST_CASE("delta is reduced into [0, 2pi)") {
  CHECK(CapacityOperator(1, 1, 0, 2 * pi).delta() == doctest::Approx(0.0));
  CHECK(CapacityOperator(1, 1, 0, -pi / 2).delta() == doctest::Approx(1.5 * pi));
  CHECK(CapacityOperator(1, 1, 0, 5 * pi).delta() == doctest::Approx(pi));
  CHECK(CapacityOperator(1, 1, 0, -1e-300).delta() < 2 * pi);
  for (double d : {-100.0, -1e-17, 0.0, 3.0, 6.2831853071795862, 1e6}) {
    const double r = normalize_angle(d);
    CHECK(r >= 0.0);
    CHECK(r < 2 * pi);
  }
}

TEST_CASE("instantaneous capacity spot values") {
  const CapacityOperator sym(1, 1, 1, pi / 2);
  CHECK(instantaneous_capacity(sym, ExchangeFrequency(1), 1.0, 0.0) == doctest::Approx(1.0));
  const CapacityOperator diag(2, 1, 0, 0);
  CHECK(instantaneous_capacity(diag, ExchangeFrequency(1), 1.0, pi / 2) == doctest::Approx(1.0));

  // Explicit matrix sandwich with the evolved amplitudes.
  const auto amp = amplitudes_at(ExchangeFrequency(1), pi / 4);
  const Complex sandwich = sym.sandwich(amp);
  CHECK(sandwich.real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(instantaneous_capacity(sym, ExchangeFrequency(1), 1.0, pi / 4) ==
        doctest::Approx(sandwich.real()).epsilon(1e-14));
  CHECK(instantaneous_capacity(sym, ExchangeFrequency(1), 0.25, pi / 4) == doctest::Approx(0.5));
}

TEST_CASE("property: unitarity over random (omega, t)") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> omega(0.0, 50.0);
  std::uniform_real_distribution<double> time(0.0, 100.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const auto a = amplitudes_at(ExchangeFrequency(omega(rng)), time(rng));
    worst = std::max(worst, std::abs(a.norm_squared() - 1.0));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("property: expanded K(t) equals the Hermitian sandwich and is real") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> diag(0.05, 10.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int i = 0; i < 2000; ++i) {
    const double q11 = diag(rng);
    const double q22 = diag(rng);
    const CapacityOperator op(q11, q22, unit(rng) * std::sqrt(q11 * q22), angle(rng));
    const ExchangeFrequency freq(5.0 * unit(rng));
    const double t = 20.0 * unit(rng);
    const Complex s = op.sandwich(amplitudes_at(freq, t));
    const double k = instantaneous_capacity(op, freq, 1.0, t);
    REQUIRE(std::abs(k - s.real()) <= 1e-12 * std::abs(s.real()));
    REQUIRE(std::abs(s.imag()) < 1e-12);
  }
}

TEST_CASE("property: K(t) repeats with period pi/omega") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const CapacityOperator op(1.0 + unit(rng), 1.0 + unit(rng), unit(rng), 6.0 * unit(rng));
    const ExchangeFrequency freq(0.1 + 3.0 * unit(rng));
    const double t = 5.0 * unit(rng);
    const double k0 = instantaneous_capacity(op, freq, 0.7, t);
    const double k1 = instantaneous_capacity(op, freq, 0.7, t + pi / freq.value());
    REQUIRE(std::abs(k1 - k0) < 1e-12);
  }
}

TEST_CASE("positive semidefinite operators give non-negative capacity") {
  const CapacityOperator edge(1.0, 4.0, 2.0, 1.0);  // q12^2 == q11 q22
  for (double t = 0.0; t < 10.0; t += 0.01) {
    CHECK(instantaneous_capacity(edge, ExchangeFrequency(0.9), 1.0, t) >= -1e-14);
  }
}
