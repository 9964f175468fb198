#include <algorithm>
#include <cmath>
#include <numbers>

#include "gkcp2/gkp.hpp"
#include "gkcp2/quadrature.hpp"
#include "gkcp2/toric.hpp"
#include "suite.hpp"

namespace gkcp2::verify {

namespace {
constexpr double kPi = std::numbers::pi;
}

void run_gkp(Suite& s) {
  s.guarded("dt_zero", "K(dt = 0) = 0 exactly", 1e-300, [] {
    const gkp::GkpValue v = gkp::potential({0.02, 1.0}, 0.0);
    return std::abs(v.K) + std::abs(v.correction_part) + std::abs(v.fubini_study_part);
  });
  s.guarded("slope", "dK/dt at t = 0 equals log(c3)/4 (one-sided difference)", 1e-6, [&] {
    double worst = 0;
    for (int i = 0; i < 5; ++i) {
      const gkp::PolarPoint p{s.uniform(0.002, 0.036), s.uniform(0.0, 2 * kPi)};
      const double h = 1e-6;
      const double slope = (gkp::potential(p, h).K - gkp::potential(p, 0.0).K) / h;
      worst = std::max(worst, std::abs(slope - 0.25 * std::log(p.c3)));
    }
    return worst;
  });
  s.guarded("riemann_oracle", "quadrature against the 1e5-panel trapezoid rule at (0.02, 1.0, 0.5)", 1e-8, [] {
    const gkp::PolarPoint p{0.02, 1.0};
    return std::abs(gkp::potential(p, 0.5).correction_part - gkp::correction_trapezoid(p, 0.5, 100000));
  });
  s.guarded("u_form", "flow-time form against the u = pi t/omega1 form", 1e-10, [&] {
    double worst = 0;
    for (int i = 0; i < 5; ++i) {
      const gkp::PolarPoint p{s.uniform(0.002, 0.036), s.uniform(0.0, 2 * kPi)};
      const double dt = s.uniform(0.05, 2.0);
      worst = std::max(worst, std::abs(gkp::potential(p, dt).correction_part - gkp::correction_u_form(p, dt, 24)));
    }
    return worst;
  });
  s.guarded("parts_sum", "K = fubini_study_part + correction_part, fubini_study_part = (dt/4) log c3", 1e-15, [] {
    const gkp::GkpValue v = gkp::potential({0.02, 1.0}, 0.5);
    return std::abs(v.K - v.fubini_study_part - v.correction_part) +
           std::abs(v.fubini_study_part - 0.125 * std::log(0.02));
  });
  s.guarded("face_approach", "correction bounded and y_t/y_0 in (1e-3, 1e3) for c3 = 1e-2 .. 1e-5", 0.5, [] {
    return gkp::correction_regularity_check({1e-2, 1e-3, 1e-4, 1e-5}, 0.7, 0.3) ? 0.0 : 1.0;
  });
  s.guarded("cocycle", "int_0^{a+b} = int_0^a + shifted int_0^b", 1e-10, [] {
    const gkp::PolarPoint p{0.015, 2.2};
    const double a = 0.4, b = 0.7;
    const elliptic::LatticeData lat = elliptic::lattice_from_c3(p.c3);
    const gkp::PolarPoint q = flow::flow_map(p, a);
    const auto y0 = flow::y_of_polar(lat, p.s).arr();
    const auto ya = flow::y_of_polar(lat, q.s).arr();
    // y_{a+t} log(y_{a+t}/y_0) = shifted integrand + y_{a+t} log(y_a/y_0)
    const double extra = quad::gauss_legendre_doubling(
        [&](double t) {
          const auto y = flow::y_of_polar(lat, q.s + kPi * t / lat.omega1).arr();
          double sum = 0;
          for (int i = 0; i < 3; ++i) sum += y[i] * std::log(ya[i] / y0[i]);
          return sum;
        }, 0.0, b, 16).value;
    const double lhs = gkp::potential(p, a + b).correction_part;
    const double rhs = gkp::potential(p, a).correction_part + gkp::potential(q, b).correction_part + 0.375 * extra;
    return std::abs(lhs - rhs);
  });
  s.guarded("order_doubling", "quadrature error non-increasing under doubling beyond order 32", 1e-14, [] {
    const gkp::PolarPoint p{0.01, 0.3};
    const elliptic::LatticeData lat = elliptic::lattice_from_c3(p.c3);
    auto f = [&](double t) { return gkp::integrand(lat, p.s, t); };
    const double ref = quad::integrate(quad::gauss_legendre_rule(512), f, 0.0, 2.0);
    double prev = INFINITY, worst = 0;
    for (int n : {32, 64, 128, 256}) {
      const double e = std::abs(quad::integrate(quad::gauss_legendre_rule(n), f, 0.0, 2.0) - ref);
      worst = std::max(worst, e - prev);
      prev = e;
    }
    return std::max(worst, 0.0);
  });
  s.guarded("local_coordinates", "Q^a at dt = 0 are the standard coordinates; |Q^1|^4 = y0 y_t / (y0^3 y_t^3)", 1e-12, [&] {
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
      const gkp::PolarPoint p{s.uniform(0.002, 0.036), s.uniform(0.0, 2 * kPi)};
      const double t1 = s.uniform(-3, 3), t2 = s.uniform(-3, 3), dt = s.uniform(0.1, 2.0);
      const auto y = flow::y_of_polar(p);
      const auto [a, b] = gkp::local_Q_coords(p, 0.0, t1, t2);
      const auto [c, d] = toric::cp2_coords({y.y1, y.y2}, toric::Vec2(t1, t2));
      worst = std::max({worst, std::abs(a - c), std::abs(b - d)});
      const auto yt = flow::y_of_polar(flow::flow_map(p, dt));
      const auto [q1, q2] = gkp::local_Q_coords(p, dt, t1, t2);
      worst = std::max({worst, std::abs(std::pow(std::abs(q1), 4) - y.y1 * yt.y1 / (y.y3 * yt.y3)) / std::pow(std::abs(q1), 4),
                        std::abs(std::pow(std::abs(q2), 4) - y.y2 * yt.y2 / (y.y3 * yt.y3)) / std::pow(std::abs(q2), 4)});
      const auto [r1, r2] = gkp::local_Q_coords(p, dt, t1 + 0.5, t2);
      worst = std::max(worst, std::abs(r1 - q1 * std::polar(1.0, 0.5)) + std::abs(r2 - q2));
    }
    return worst;
  });
}

}  // namespace gkcp2::verify
