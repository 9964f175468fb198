#include <cmath>

#include "doctest.h"
#include "gkcp2/gkp.hpp"
#include "gkcp2/quadrature.hpp"
#include "gkcp2/toric.hpp"

using namespace gkcp2;
using namespace gkcp2::gkp;

TEST_CASE("K vanishes at dt = 0") {
  const GkpValue v = potential({0.02, 1.0}, 0.0);
  CHECK(v.K == 0.0);
  CHECK(v.correction_part == 0.0);
}

TEST_CASE("initial slope is log(c3)/4") {
  const PolarPoint p{0.013, 2.0};
  const double h = 1e-6;
  CHECK(std::abs(potential(p, h).K / h - 0.25 * std::log(p.c3)) < 1e-6);
}

TEST_CASE("quadrature against the trapezoid rule") {
  const PolarPoint p{0.02, 1.0};
  CHECK(std::abs(potential(p, 0.5).correction_part - correction_trapezoid(p, 0.5, 20000)) < 1e-8);
  CHECK(std::abs(potential(p, 1.3).correction_part - correction_u_form(p, 1.3, 32)) < 1e-10);
}

TEST_CASE("local coordinates at dt = 0") {
  const PolarPoint p{0.02, 0.6};
  const flow::TriplePoint y = flow::y_of_polar(p);
  const auto [q1, q2] = local_Q_coords(p, 0.0, 0.2, 1.1);
  const auto [z1, z2] = toric::cp2_coords({y.y1, y.y2}, toric::Vec2(0.2, 1.1));
  CHECK(std::abs(q1 - z1) < 1e-13);
  CHECK(std::abs(q2 - z2) < 1e-13);
}

TEST_CASE("face approach stays regular") {
  std::vector<FaceSample> samples;
  CHECK(correction_regularity_check({1e-2, 1e-4, 1e-6}, 0.7, 0.3, &samples));
  CHECK(samples.size() == 3);
}

TEST_CASE("Gauss-Legendre rule") {
  const quad::Rule r = quad::gauss_legendre_rule(10);
  double w = 0;
  for (double x : r.weights) w += x;
  CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(quad::integrate(r, [](double x) { return std::pow(x, 19); }, 0.0, 1.0) == doctest::Approx(0.05).epsilon(1e-13));
  CHECK_THROWS_AS(quad::gauss_legendre_doubling([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 8, 1e-15, 2),
                  QuadratureError);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(potential({0.02, 1.0}, -0.1), DomainError);
  CHECK_THROWS_AS(potential({0.02, 1.0}, 0.1, 4), DomainError);
  CHECK_THROWS_AS(potential({0.5, 1.0}, 0.1), DomainError);
}
