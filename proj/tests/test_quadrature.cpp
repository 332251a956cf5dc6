#include <cmath>
#include <numbers>

#include "doctest.h"
#include "twostate/errors.hpp"
#include "twostate/quadrature.hpp"

using namespace twostate;
using std::numbers::pi;

TEST_CASE("polynomials up to cubic are exact") {
  const auto r = adaptive_simpson([](double x) { return 3 * x * x * x - x + 2; }, -1.0, 2.0);
  CHECK(r.value == doctest::Approx(3.0 * 15.0 / 4.0 - 1.5 + 6.0).epsilon(1e-14));
}

TEST_CASE("smooth transcendental integrands meet the absolute tolerance") {
  const auto r = adaptive_simpson([](double x) { return std::exp(-x) * std::sin(3 * x); }, 0.0, 10.0);
  const double exact = (3.0 - std::exp(-10.0) * (std::sin(30.0) + 3.0 * std::cos(30.0))) / 10.0;
  CHECK(std::abs(r.value - exact) < 1e-10);
  CHECK(r.evaluations > 3);
}

TEST_CASE("reversed and empty intervals") {
  auto f = [](double x) { return x; };
  CHECK(adaptive_simpson(f, 1.0, 0.0).value == doctest::Approx(-0.5));
  CHECK(adaptive_simpson(f, 2.0, 2.0).value == 0.0);
}

TEST_CASE("oscillatory nodes bound panel width and keep fixed points") {
  const double fixed[] = {0.25, 0.5, 3.0};
  const auto nodes = oscillatory_nodes(0.0, 1.0, 20.0, fixed);
  CHECK(nodes.front() == 0.0);
  CHECK(nodes.back() == 1.0);
  bool saw_quarter = false;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    CHECK(nodes[i + 1] > nodes[i]);
    CHECK(nodes[i + 1] - nodes[i] <= pi / 20.0 + 1e-15);
    saw_quarter = saw_quarter || nodes[i] == 0.25;
  }
  CHECK(saw_quarter);
  CHECK(oscillatory_nodes(0.0, 2.0, 0.0).size() == 2);
}

TEST_CASE("high-frequency integrand over split panels") {
  const double omega = 500.0;
  const auto nodes = oscillatory_nodes(0.0, 3.0, omega);
  const auto r = integrate_panels([&](double t) { return std::sin(omega * t); }, nodes);
  CHECK(std::abs(r.value - (1.0 - std::cos(3.0 * omega)) / omega) < 1e-10);
}

TEST_CASE("failures surface as NumericalFailure") {
  CHECK_THROWS_AS(adaptive_simpson([](double x) { return 1.0 / x; }, 0.0, 1.0), NumericalFailure);
  QuadratureOptions tight;
  tight.max_evaluations = 50;
  CHECK_THROWS_AS(
      adaptive_simpson([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0, tight),
      NumericalFailure);
  QuadratureOptions shallow;
  shallow.max_depth = 2;
  CHECK_THROWS_AS(adaptive_simpson([](double x) { return std::sqrt(x); }, 0.0, 1.0, shallow),
                  NumericalFailure);
}
