#include "gkcp2/flow.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/numeric/odeint.hpp>

namespace gkcp2::flow {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

elliptic::Complex contour_time(const LatticeData& lat, double s) {
  return lat.omega2() + s * lat.omega1 / kPi;
}

// c3 / (1/12 - wp(z)) with 1/12 - wp formed without cancellation.
double y_at(const LatticeData& lat, elliptic::Complex z) {
  const elliptic::WeierstrassValues w = elliptic::evaluate(z, lat);
  return lat.c3 / (lat.twelfth_minus_e1 - w.wp_minus_e1).real();
}

}  // namespace

double reduce_s(double s) {
  double r = std::fmod(s, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

TriplePoint y_of_polar(const LatticeData& lat, double s) {
  const double tf = lat.tertiary();
  const elliptic::Complex t = contour_time(lat, s);
  return {y_at(lat, t + tf), y_at(lat, t + 2.0 * tf), y_at(lat, t)};
}

TriplePoint y_of_polar(const PolarPoint& p, const elliptic::GuardBand& guard) {
  return y_of_polar(elliptic::lattice_from_c3(p.c3, guard), p.s);
}

TriplePoint y_via_zeta(const LatticeData& lat, double s) {
  const double tf = lat.tertiary();
  const elliptic::Complex t = contour_time(lat, s);
  const elliptic::Complex zt = elliptic::zeta_w(t, lat);
  const elliptic::Complex zm = elliptic::zeta_w(t - tf, lat);
  const elliptic::Complex zp = elliptic::zeta_w(t + tf, lat);
  const elliptic::Complex ztf = elliptic::zeta_w(tf, lat);
  return {(zt - zm + 0.5 - ztf).real(), (zp - zt + 0.5 - ztf).real(),
          (zm - zp + 2.0 * ztf).real()};
}

TriplePoint y_via_zeta(const PolarPoint& p, const elliptic::GuardBand& guard) {
  return y_via_zeta(elliptic::lattice_from_c3(p.c3, guard), p.s);
}

std::array<double, 3> dy_dc3(const LatticeData& lat, double s) {
  const double c3 = lat.c3;
  const std::array<double, 3> y = y_of_polar(lat, s).arr();
  std::array<double, 3> d{};
  for (int i = 0; i < 3; ++i) {
    // index i here is y^{i+1}; the varsigma shift is (i+1-3) 2 pi / 3
    const double yi = y[i];
    const double yn = y[(i + 1) % 3];
    const double ynn = y[(i + 2) % 3];
    const double vs = elliptic::varsigma(s + (i - 2) * kTwoPi / 3.0, lat);
    d[i] = (0.5 * (yi * yi - yi) - 9.0 * c3 * yi + 6.0 * c3 + 3.0 * yi * (yn - ynn) * vs) /
           (c3 * (1.0 - 27.0 * c3));
  }
  return d;
}

std::array<double, 3> dy_dc3(const PolarPoint& p, const elliptic::GuardBand& guard) {
  return dy_dc3(elliptic::lattice_from_c3(p.c3, guard), p.s);
}

std::array<double, 3> dy_ds(const LatticeData& lat, double s) {
  const std::array<double, 3> y = y_of_polar(lat, s).arr();
  const double k = lat.omega1 / kPi;
  return {k * y[0] * (y[1] - y[2]), k * y[1] * (y[2] - y[0]), k * y[2] * (y[0] - y[1])};
}

PolarPoint polar_of_y(double y1, double y2, const elliptic::GuardBand& guard) {
  const double y3 = 1.0 - y1 - y2;
  if (!(y1 > 0.0 && y2 > 0.0 && y3 > 0.0)) throw DomainError("point outside the open triangle");
  const double c3 = y1 * y2 * y3;
  const LatticeData lat = elliptic::lattice_from_c3(c3, guard);

  auto resid = [&](double s) {
    const TriplePoint y = y_of_polar(lat, s);
    return std::pair<double, double>{y.y1 - y1, y.y2 - y2};
  };
  double best_s = 0.0;
  double best = INFINITY;
  constexpr int kScan = 64;
  for (int k = 0; k < kScan; ++k) {
    const double s = kTwoPi * k / kScan;
    const auto [r1, r2] = resid(s);
    const double v = r1 * r1 + r2 * r2;
    if (v < best) {
      best = v;
      best_s = s;
    }
  }
  // Gauss-Newton on the two residuals with the analytic s-derivative.
  double s = best_s;
  for (int it = 0; it < 50; ++it) {
    const auto [r1, r2] = resid(s);
    const std::array<double, 3> d = dy_ds(lat, s);
    const double step = (r1 * d[0] + r2 * d[1]) / (d[0] * d[0] + d[1] * d[1]);
    s -= step;
    if (std::abs(step) < 1e-15 * kTwoPi) {
      const auto [e1, e2] = resid(s);
      if (std::hypot(e1, e2) > 1e-8) break;
      return {c3, reduce_s(s)};
    }
  }
  std::ostringstream os;
  os << "chart inversion did not converge at y = (" << y1 << ", " << y2 << ")";
  throw ConvergenceError(os.str());
}

PolarPoint flow_map(const PolarPoint& p, double dt, const elliptic::GuardBand& guard) {
  const LatticeData lat = elliptic::lattice_from_c3(p.c3, guard);
  return {p.c3, reduce_s(p.s + kPi * dt / lat.omega1)};
}

TriplePoint ode_oracle(const TriplePoint& y0, double dt, const OdeOptions& opt) {
  using State = std::array<double, 3>;
  namespace odeint = boost::numeric::odeint;
  State x = y0.arr();
  if (dt == 0.0) return y0;
  auto rhs = [](const State& y, State& dy, double) {
    dy[0] = y[0] * (y[1] - y[2]);
    dy[1] = y[1] * (y[2] - y[0]);
    dy[2] = y[2] * (y[0] - y[1]);
  };
  auto stepper = odeint::make_controlled(opt.abs_tol, opt.rel_tol,
                                         odeint::runge_kutta_fehlberg78<State>());
  std::size_t steps = 0;
  auto observer = [&](const State&, double) {
    if (++steps > opt.max_steps) throw StepSizeError("ODE integration exceeded the step budget");
  };
  try {
    odeint::integrate_adaptive(stepper, rhs, x, 0.0, dt, std::copysign(opt.initial_step, dt),
                               observer);
  } catch (const StepSizeError&) {
    throw;
  } catch (const std::exception& e) {
    throw StepSizeError(std::string("ODE integration failed: ") + e.what());
  }
  if (!(std::isfinite(x[0]) && std::isfinite(x[1]) && std::isfinite(x[2])))
    throw StepSizeError("ODE integration produced non-finite state");
  return {x[0], x[1], x[2]};
}

}  // namespace gkcp2::flow
