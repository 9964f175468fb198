#include <algorithm>
#include <cmath>
#include <numbers>

#include "gkcp2/flow.hpp"
#include "gkcp2/oracles.hpp"
#include "suite.hpp"

namespace gkcp2::verify {

namespace {
using elliptic::Complex;
using elliptic::LatticeData;
constexpr double kPi = std::numbers::pi;
}  // namespace

void run_flow(Suite& s) {
  double zeta_form = 0, inv = 0, ode = 0, sum_rule = 0, prod_rule = 0, dfd = 0, product = 0;
  double round_trip = 0, jac = 0;
  for (int i = 0; i < 50; ++i) {
    const double c3 = s.uniform(2e-4, 0.0365), sv = s.uniform(0.0, 2 * kPi);
    const LatticeData lat = elliptic::lattice_from_c3(c3);
    const flow::TriplePoint y = flow::y_of_polar(lat, sv);
    const flow::TriplePoint z = flow::y_via_zeta(lat, sv);
    zeta_form = std::max({zeta_form, std::abs(y.y1 - z.y1), std::abs(y.y2 - z.y2), std::abs(y.y3 - z.y3)});
    inv = std::max({inv, std::abs(y.sum() - 1.0), std::abs(y.product() - c3) / c3});

    // (pi/omega1) dy/ds from wp': dy/dz = y^2 wp'(z) / c3
    const Complex t = lat.omega2() + sv * lat.omega1 / kPi;
    const double tf = lat.tertiary();
    const std::array<Complex, 3> args = {t + tf, t + 2.0 * tf, t};
    const auto ya = y.arr();
    for (int k = 0; k < 3; ++k) {
      const double lhs = ya[k] * ya[k] * elliptic::wp_prime(args[k], lat).real() / c3;
      const double rhs = ya[k] * (ya[(k + 1) % 3] - ya[(k + 2) % 3]);
      ode = std::max(ode, std::abs(lhs - rhs));
    }
    const auto d = flow::dy_dc3(lat, sv);
    sum_rule = std::max(sum_rule, std::abs(d[0] + d[1] + d[2]));
    prod_rule = std::max(prod_rule, std::abs(d[0] * y.y2 * y.y3 + y.y1 * d[1] * y.y3 + y.y1 * y.y2 * d[2] - 1.0));
    if (i < 10 && c3 > 2e-3) {
      const double h = 1e-5 * c3;
      const auto yp = flow::y_of_polar(elliptic::lattice_from_c3(c3 + h), sv).arr();
      const auto ym = flow::y_of_polar(elliptic::lattice_from_c3(c3 - h), sv).arr();
      for (int k = 0; k < 3; ++k) {
        const double fd = (yp[k] - ym[k]) / (2 * h);
        dfd = std::max(dfd, std::abs(d[k] - fd) / std::max(std::abs(fd), 1.0));
      }
    }
    const Complex zr = s.uniform(0.0, 2.0) * lat.omega1 + lat.omega2() * s.uniform(-1.0, 1.0);
    if (elliptic::pole_distance(zr, lat) > 0.05 * lat.omega1 &&
        elliptic::pole_distance(zr - tf, lat) > 0.05 * lat.omega1 &&
        elliptic::pole_distance(zr + tf, lat) > 0.05 * lat.omega1) {
      const Complex p = (1.0 / 12 - elliptic::wp(zr, lat)) * (1.0 / 12 - elliptic::wp(zr - tf, lat)) *
                        (1.0 / 12 - elliptic::wp(zr + tf, lat));
      product = std::max(product, std::abs(p - c3 * c3) / (c3 * c3));
    }
  }
  s.check("zeta_form", "y from wp against the zeta-function form", zeta_form, 1e-10);
  s.check("triangle_invariants", "sum y = 1 and prod y = c3", inv, 1e-11);
  s.check("flow_equation", "(pi/omega1) dy/ds = y^i (y^{i+1} - y^{i+2}) via analytic wp'", ode, 1e-9);
  s.check("dc3_sum", "sum_i dy^i/dc3 = 0", sum_rule, 1e-9);
  s.check("dc3_product", "d(y1 y2 y3)/dc3 = 1", prod_rule, 1e-9);
  s.check("dc3_differences", "dy/dc3 against central differences", dfd, 1e-6);
  s.check("cubic_product", "(1/12 - wp(z))(1/12 - wp(z - tau))(1/12 - wp(z + tau)) = c3^2", product, 1e-10);

  for (int i = 0; i < 100; ++i) {
    const double y1 = s.uniform(0.02, 0.96), y2 = s.uniform(0.02, 0.98 - y1);
    const flow::PolarPoint p = flow::polar_of_y(y1, y2);
    const flow::TriplePoint y = flow::y_of_polar(p);
    round_trip = std::max({round_trip, std::abs(y.y1 - y1), std::abs(y.y2 - y2),
                           std::abs(p.c3 - y1 * y2 * (1 - y1 - y2))});
    if (i < 20) {
      const double h = 1e-5;
      auto s_at = [&](double a, double b) {
        const double v = flow::polar_of_y(a, b).s;
        return v + 2 * kPi * std::round((p.s - v) / (2 * kPi));
      };
      const double ds1 = oracle::diff4([&](double v) { return s_at(v, y2); }, y1, h);
      const double ds2 = oracle::diff4([&](double v) { return s_at(y1, v); }, y2, h);
      const double dc1 = y2 * (y.y3 - y1), dc2 = y1 * (y.y3 - y2);
      const double det = dc1 * ds2 - dc2 * ds1;
      const double w1 = elliptic::lattice_from_c3(p.c3).omega1;
      jac = std::max(jac, std::abs(std::abs(det) - kPi / w1) / (kPi / w1));
    }
  }
  s.check("chart_round_trip", "y -> (c3, s) -> y over 100 interior points", round_trip, 1e-9);
  s.check("chart_jacobian", "|d(c3, s)/d(y1, y2)| = pi / omega1", jac, 1e-6);

  double rk = 0, full = 0, conserve = 0;
  for (int i = 0; i < 20; ++i) {
    const double c3 = s.uniform(5e-3, 0.036), sv = s.uniform(0.0, 2 * kPi);
    const LatticeData lat = elliptic::lattice_from_c3(c3);
    const flow::TriplePoint y0 = flow::y_of_polar(lat, sv);
    for (double frac : {0.1, 0.37, 0.8, 1.0}) {
      const double dt = frac * 2 * lat.omega1;
      const flow::TriplePoint a = flow::y_of_polar(flow::flow_map({c3, sv}, dt));
      const flow::TriplePoint b = flow::ode_oracle(y0, dt);
      rk = std::max({rk, std::abs(a.y1 - b.y1), std::abs(a.y2 - b.y2), std::abs(a.y3 - b.y3)});
      if (frac == 1.0)
        full = std::max({full, std::abs(a.y1 - y0.y1), std::abs(a.y2 - y0.y2), std::abs(a.y3 - y0.y3)});
    }
    if (i < 5) {
      const flow::TriplePoint b = flow::ode_oracle(y0, 10.0);
      conserve = std::max({conserve, std::abs(b.sum() - 1.0), std::abs(b.product() - c3)});
    }
  }
  s.check("rk_oracle", "closed-form flow against Runge-Kutta over dt in [0, 2 omega1]", rk, 1e-8);
  s.check("full_period", "flow for dt = 2 omega1 is the identity on y", full, 1e-10);
  s.check("ode_conservation", "RK oracle conserves sum y and prod y over dt = 10", conserve, 1e-9);

  s.guarded("orientation", "clockwise: at s = 0, y1 = y2 and y2 decreasing", 1e-12, [] {
    const LatticeData lat = elliptic::lattice_from_c3(0.02);
    const flow::TriplePoint y = flow::y_of_polar(lat, 0.0);
    const auto d = flow::dy_ds(lat, 0.0);
    return std::abs(y.y1 - y.y2) + (d[1] < 0.0 ? 0.0 : 1.0) + (y.y1 > y.y3 ? 0.0 : 1.0);
  });
  s.guarded("fixed_point", "centre of the triangle is a fixed point of the ODE", 1e-15, [] {
    const flow::TriplePoint c{1.0 / 3, 1.0 / 3, 1.0 / 3};
    const flow::TriplePoint b = flow::ode_oracle(c, 3.0);
    return std::max({std::abs(b.y1 - c.y1), std::abs(b.y2 - c.y2), std::abs(b.y3 - c.y3)});
  });
}

}  // namespace gkcp2::verify
