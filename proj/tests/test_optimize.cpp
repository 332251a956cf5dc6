#include <cmath>
#include <numbers>

#include "doctest.h"
#include "twostate/aggregate.hpp"
#include "twostate/errors.hpp"
#include "twostate/optimize.hpp"

using namespace twostate;
using std::numbers::pi;

TEST_CASE("bisection finds simple roots and validates the bracket") {
  const auto r = bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-14, 1e-14);
  CHECK(r.root == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-12, 1e-12),
                  InvalidInput);
}

TEST_CASE("golden section on a parabola") {
  const auto m = golden_section_maximize([](double x) { return -(x - 0.3) * (x - 0.3); }, -2.0, 5.0, 1e-10);
  CHECK(std::abs(m.argmax - 0.3) < 1e-7);
  CHECK(m.width <= 1e-10);
}

TEST_CASE("step model optimum") {
  const auto r = step_model_optimum();
  CHECK(std::abs(r.argmax - 1.165561) < 1e-5);
  CHECK(std::abs(r.argmax - 1.16556118520721130) < 1e-12);
  CHECK(std::abs(std::tan(r.argmax) - 2.0 * r.argmax) < 1e-10);
  CHECK(r.residual < r.tolerance);
  CHECK(std::abs(r.q_star_max - 1.7246) < 5e-4);
  CHECK(r.delta_used == doctest::Approx(pi / 2));
  // f(x) = tan x - 2x is negative just above zero, so 0.1 excludes the trivial root.
  CHECK(std::tan(0.1) - 0.2 < 0.0);
  CHECK(std::tan(1.55) - 3.1 > 0.0);
}

TEST_CASE("decay model optimum") {
  const auto r = decay_model_optimum();
  CHECK(std::abs(r.argmax - 0.5773503) < 1e-6);
  CHECK(std::abs(r.q_star_max - 1.6495) < 5e-4);
  CHECK(r.q_star_max == doctest::Approx(1.0 + 3.0 * std::sqrt(3.0) / 8.0).epsilon(1e-15));
  CHECK(r.residual < 1e-8);
  auto g = [](double nu) { return 2 * nu / ((1 + nu * nu) * (1 + nu * nu)); };
  const double h = 1e-6;
  CHECK(std::abs((g(r.argmax + h) - g(r.argmax - h)) / (2 * h)) < 1e-6);
}

TEST_CASE("generic maximizer recovers the closed-form optima") {
  const auto step = ActivityProfile::step(1.0);
  const auto s = maximize_q_star(step, pi / 2, 0.01, pi, 1.0);
  const auto s_exact = step_model_optimum();
  CHECK(std::abs(s.argmax - s_exact.argmax) < 1e-6);
  CHECK(std::abs(s.q_star_max - s_exact.q_star_max) < 1e-9);
  CHECK(s.status == OptimumStatus::converged);
  CHECK(s.residual <= s.tolerance);

  const auto decay = ActivityProfile::decay(2.0);
  const auto d = maximize_q_star(decay, pi / 2, 0.01, 5.0, 1.0);
  const auto d_exact = decay_model_optimum();
  CHECK(std::abs(d.argmax - 2.0 * d_exact.argmax / 2.0) < 1e-6);
  CHECK(std::abs(d.q_star_max - d_exact.q_star_max) < 1e-9);

  for (const auto* r : {&s, &d}) {
    const auto& profile = r == &s ? step : decay;
    CHECK(certify_local_max(
        [&](double w) { return scaled_symmetric(1.0, profile, ExchangeFrequency(w), pi / 2); },
        r->argmax, r->q_star_max));
  }
}

TEST_CASE("flat landscape and edge warnings") {
  const auto flat = maximize_q_star(ActivityProfile::step(1.0), 0.0, 0.5, 3.0, 1.0);
  CHECK(flat.status == OptimumStatus::flat);
  CHECK(flat.q_star_max == 1.0);
  CHECK(flat.argmax == 0.5);

  const auto edge = maximize_q_star(ActivityProfile::step(1.0), pi / 2, 0.01, 0.5, 1.0);
  CHECK(edge.status == OptimumStatus::at_bracket_edge);
  CHECK(edge.argmax == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("invalid brackets and ratios") {
  const auto step = ActivityProfile::step(1.0);
  CHECK_THROWS_AS(maximize_q_star(step, 1.0, 2.0, 1.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(maximize_q_star(step, 1.0, 1.0, 1.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(maximize_q_star(step, 1.0, -1.0, 1.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(maximize_q_star(step, 1.0, 0.0, 1.0, 1.5), InvalidInput);
}

TEST_CASE("zeros of the step interference at multiples of pi") {
  const auto step = ActivityProfile::step(1.0);
  for (int n = 1; n <= 5; ++n) {
    CHECK(std::abs(scaled_symmetric(1.0, step, ExchangeFrequency(n * pi), pi / 2) - 1.0) < 1e-12);
  }
}

TEST_CASE("asymmetric operator search") {
  const CapacityOperator op(2.0, 1.0, 1.2, pi / 2);
  const auto profile = ActivityProfile::decay(1.0);
  const auto r = maximize_q_star(op, profile, 0.0, 3.0);
  auto f = [&](double w) { return aggregate_product(op, profile, ExchangeFrequency(w)).q_star; };
  CHECK(certify_local_max(f, r.argmax, r.q_star_max));
  CHECK(r.q_star_max > 1.0);
}
