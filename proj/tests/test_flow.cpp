#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gkcp2/flow.hpp"

using namespace gkcp2;
using namespace gkcp2::flow;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("contour invariants") {
  for (double s : {0.0, 1.0, 2.5, 5.9}) {
    const TriplePoint y = y_of_polar({0.012, s});
    CHECK(std::abs(y.sum() - 1.0) < 1e-13);
    CHECK(std::abs(y.product() - 0.012) < 1e-14);
  }
}

TEST_CASE("s = 0 lies on the symmetric axis") {
  const TriplePoint y = y_of_polar({0.025, 0.0});
  CHECK(std::abs(y.y1 - y.y2) < 1e-13);
  CHECK(y.y1 > y.y3);
}

TEST_CASE("zeta and wp forms agree") {
  const PolarPoint p{0.009, 2.1};
  const TriplePoint a = y_of_polar(p), b = y_via_zeta(p);
  CHECK(std::abs(a.y1 - b.y1) + std::abs(a.y2 - b.y2) + std::abs(a.y3 - b.y3) < 1e-11);
}

TEST_CASE("c3 derivatives: sum rule and product rule") {
  const PolarPoint p{0.017, 0.8};
  const auto d = dy_dc3(p);
  const TriplePoint y = y_of_polar(p);
  CHECK(std::abs(d[0] + d[1] + d[2]) < 1e-10);
  CHECK(std::abs(d[0] * y.y2 * y.y3 + y.y1 * d[1] * y.y3 + y.y1 * y.y2 * d[2] - 1.0) < 1e-10);
}

TEST_CASE("chart round trip") {
  const PolarPoint p{0.02, 4.0};
  const TriplePoint y = y_of_polar(p);
  const PolarPoint q = polar_of_y(y.y1, y.y2);
  CHECK(std::abs(q.c3 - p.c3) < 1e-13);
  CHECK(std::abs(q.s - p.s) < 1e-9);
}

TEST_CASE("flow map against the ODE") {
  const PolarPoint p{0.02, 1.3};
  const double dt = 1.7;
  const TriplePoint a = y_of_polar(flow_map(p, dt));
  const TriplePoint b = ode_oracle(y_of_polar(p), dt);
  CHECK(std::abs(a.y1 - b.y1) + std::abs(a.y2 - b.y2) + std::abs(a.y3 - b.y3) < 1e-9);
}

TEST_CASE("full period and identity") {
  const PolarPoint p{0.03, 0.7};
  const double w1 = elliptic::lattice_from_c3(p.c3).omega1;
  const TriplePoint y0 = y_of_polar(p), y1 = y_of_polar(flow_map(p, 2 * w1));
  CHECK(std::abs(y0.y1 - y1.y1) < 1e-12);
  CHECK(flow_map(p, 0.0).s == doctest::Approx(p.s));
}

TEST_CASE("clockwise orientation and fixed point") {
  const elliptic::LatticeData lat = elliptic::lattice_from_c3(0.02);
  CHECK(dy_ds(lat, 0.0)[1] < 0.0);
  const TriplePoint c{1.0 / 3, 1.0 / 3, 1.0 / 3};
  const TriplePoint e = ode_oracle(c, 3.0);
  CHECK(std::abs(e.y1 - 1.0 / 3) < 1e-15);
}

TEST_CASE("reduce_s") {
  CHECK(reduce_s(-0.5) == doctest::Approx(2 * kPi - 0.5));
  CHECK(reduce_s(2 * kPi + 0.25) == doctest::Approx(0.25));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(y_of_polar({0.05, 0.0}), DomainError);
  CHECK_THROWS_AS(polar_of_y(0.7, 0.4), DomainError);
  CHECK_THROWS_AS(polar_of_y(0.0, 0.4), DomainError);
}
