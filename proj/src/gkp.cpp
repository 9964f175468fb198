#include "gkcp2/gkp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gkcp2/quadrature.hpp"

namespace gkcp2::gkp {

namespace {

constexpr double kPi = std::numbers::pi;

void check_args(double dt, int quad_order) {
  if (!(dt >= 0.0) || !std::isfinite(dt)) throw DomainError("dt must be finite and non-negative");
  if (quad_order < 8) throw DomainError("quad_order must be at least 8");
}

}  // namespace

double integrand(const elliptic::LatticeData& lat, double s, double t) {
  const auto y0 = flow::y_of_polar(lat, s).arr();
  const auto yt = flow::y_of_polar(lat, s + kPi * t / lat.omega1).arr();
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) sum += yt[i] * std::log(yt[i] / y0[i]);
  return sum;
}

GkpValue potential(const PolarPoint& p, double dt, int quad_order) {
  check_args(dt, quad_order);
  const elliptic::LatticeData lat = elliptic::lattice_from_c3(p.c3);
  GkpValue v;
  v.point = p;
  v.dt = dt;
  if (dt == 0.0) return v;
  const quad::Result r = quad::gauss_legendre_doubling(
      [&](double t) { return integrand(lat, p.s, t); }, 0.0, dt, quad_order);
  v.fubini_study_part = 0.25 * dt * std::log(p.c3);
  v.correction_part = 0.375 * r.value;
  v.K = v.fubini_study_part + v.correction_part;
  v.quad_order_used = r.order;
  return v;
}

double correction_u_form(const PolarPoint& p, double dt, int quad_order) {
  check_args(dt, quad_order);
  if (dt == 0.0) return 0.0;
  const elliptic::LatticeData lat = elliptic::lattice_from_c3(p.c3);
  const auto y0 = flow::y_of_polar(lat, p.s).arr();
  auto f = [&](double u) {
    const auto y = flow::y_of_polar(lat, p.s + u).arr();
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) sum += y[i] * std::log(y[i] / y0[i]);
    return sum;
  };
  const quad::Result r = quad::gauss_legendre_doubling(f, 0.0, kPi * dt / lat.omega1, quad_order);
  return 3.0 * lat.omega1 / (8.0 * kPi) * r.value;
}

double correction_trapezoid(const PolarPoint& p, double dt, int panels) {
  const elliptic::LatticeData lat = elliptic::lattice_from_c3(p.c3);
  return 0.375 * quad::trapezoid([&](double t) { return integrand(lat, p.s, t); }, 0.0, dt, panels);
}

std::pair<std::complex<double>, std::complex<double>> local_Q_coords(const PolarPoint& p, double dt,
                                                                     double theta1, double theta2) {
  const elliptic::LatticeData lat = elliptic::lattice_from_c3(p.c3);
  const auto y0 = flow::y_of_polar(lat, p.s).arr();
  const auto yt = flow::y_of_polar(lat, p.s + kPi * dt / lat.omega1).arr();
  // Q^2 = z zhat, so |Q| = (|z|^2 |zhat|^2)^{1/4}.
  const double d = y0[2] * yt[2];
  return {std::polar(std::pow(y0[0] * yt[0] / d, 0.25), theta1),
          std::polar(std::pow(y0[1] * yt[1] / d, 0.25), theta2)};
}

bool correction_regularity_check(const std::vector<double>& c3_sequence, double s, double dt,
                                 std::vector<FaceSample>* samples, double bound) {
  bool ok = true;
  for (double c3 : c3_sequence) {
    const GkpValue v = potential({c3, s}, dt);
    const elliptic::LatticeData lat = elliptic::lattice_from_c3(c3);
    const auto y0 = flow::y_of_polar(lat, s).arr();
    FaceSample fs{c3, v.correction_part, v.fubini_study_part, INFINITY, 0.0};
    constexpr int kProbe = 64;
    for (int k = 0; k <= kProbe; ++k) {
      const auto yt = flow::y_of_polar(lat, s + kPi * dt * k / kProbe / lat.omega1).arr();
      for (int i = 0; i < 3; ++i) {
        fs.min_ratio = std::min(fs.min_ratio, yt[i] / y0[i]);
        fs.max_ratio = std::max(fs.max_ratio, yt[i] / y0[i]);
      }
    }
    ok = ok && std::isfinite(fs.correction) && std::abs(fs.correction) < bound &&
         fs.min_ratio > 1.0 / bound && fs.max_ratio < bound;
    if (samples) samples->push_back(fs);
  }
  return ok;
}

}  // namespace gkcp2::gkp
