#include "gkcp2/oracles.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

#include "gkcp2/flow.hpp"
#include "gkcp2/gks.hpp"
#include "gkcp2/toric.hpp"

namespace gkcp2::oracle {

namespace {
constexpr double kPi = std::numbers::pi;
}

Complex lattice_sum_wp(Complex z, const elliptic::LatticeData& lat, int N) {
  const Complex w1 = 2.0 * lat.omega1;
  const Complex w2 = 2.0 * lat.omega2();
  Complex sum = 1.0 / (z * z);
  Complex g4 = 0.0, g6 = 0.0;
  for (int m = -N; m <= N; ++m)
    for (int n = -N; n <= N; ++n) {
      if (m == 0 && n == 0) continue;
      const Complex w = double(m) * w1 + double(n) * w2;
      const Complex zw = z - w;
      sum += 1.0 / (zw * zw) - 1.0 / (w * w);
      const Complex w2i = 1.0 / (w * w);
      g4 += w2i * w2i;
      g6 += w2i * w2i * w2i;
    }
  // Outside the box: 1/(z-w)^2 - 1/w^2 = sum_j (j+1) z^j / w^{j+2}; odd j cancel.
  const Complex t4 = lat.g2 / 60.0 - g4;
  const Complex t6 = lat.g3 / 140.0 - g6;
  return sum + 3.0 * z * z * t4 + 5.0 * std::pow(z, 4) * t6;
}

double period_integral_omega1(double g2, double g3) {
  auto p = [&](double t) { return 4.0 * t * t * t - g2 * t - g3; };
  // e1 lies to the right of the local minimum sqrt(g2/12) of the cubic.
  double lo = std::sqrt(g2 / 12.0), hi = 1.0;
  while (p(hi) <= 0.0) hi *= 2.0;
  boost::math::tools::eps_tolerance<double> tol(52);
  const auto br = boost::math::tools::bisect(p, lo, hi, tol);
  const double e1 = 0.5 * (br.first + br.second);
  // t = e1 + u^2 removes the endpoint singularity.
  const double b = 3.0 * e1;
  const double c = (12.0 * e1 * e1 - g2) / 4.0;
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate(
      [&](double u) { return 1.0 / std::sqrt(((u * u) + b) * (u * u) + c); }, 0.0,
      std::numeric_limits<double>::infinity());
}

double extrapolate_to_zero(const std::vector<double>& x, const std::vector<double>& f) {
  std::vector<double> p = f;
  const std::size_t n = x.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = 0; i + k < n; ++i)
      p[i] = (x[i + k] * p[i] - x[i] * p[i + 1]) / (x[i + k] - x[i]);
  return p[0];
}

double diff4(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
}

Mat4 chart_jacobian(double c3, double s) {
  using gks::kC3;
  using gks::kS;
  const flow::TriplePoint y = flow::y_of_polar({c3, s});
  Mat4 M = Mat4::Zero();
  M(0, 0) = M(1, 1) = 1.0;
  M(kC3, 2) = y.y2 * (y.y3 - y.y1);
  M(kC3, 3) = y.y1 * (y.y3 - y.y2);
  // Unwrap s around the base value so the differences never straddle 2 pi.
  auto s_at = [&](double y1, double y2) {
    double v = flow::polar_of_y(y1, y2).s;
    return v + 2.0 * kPi * std::round((s - v) / (2.0 * kPi));
  };
  const double h = 1e-5;
  M(kS, 2) = diff4([&](double v) { return s_at(v, y.y2); }, y.y1, h);
  M(kS, 3) = diff4([&](double v) { return s_at(y.y1, v); }, y.y2, h);
  return M;
}

Mat4 I_minus_chain_rule(double c3, double s) {
  const flow::TriplePoint y = flow::y_of_polar({c3, s});
  const Mat4 J = toric::complex_structure_ytheta(toric::DelzantPolygon::cp2(), {y.y1, y.y2});
  const Mat4 M = chart_jacobian(c3, s);
  return M * J * M.inverse();
}

Mat4 I_plus_pullback(double c3, double s, double dt) {
  using gks::kC3;
  using gks::kS;
  auto s_shift = [&](double c) { return kPi * dt / elliptic::lattice_from_c3(c).omega1; };
  const double h = 1e-4 * std::min(c3, elliptic::kC3Max - c3);
  Mat4 D = Mat4::Identity();
  D(kS, kC3) = diff4(s_shift, c3, h);
  const double s1 = s + s_shift(c3);
  const Mat4 Im = gks::J_matrix(elliptic::lattice_from_c3(c3), s1);
  return D.inverse() * Im * D;
}

Mat4 Q_transport(double c3, double s) {
  const flow::TriplePoint y = flow::y_of_polar({c3, s});
  const Mat4 M = chart_jacobian(c3, s);
  return M * toric::hitchin_Q_ytheta({y.y1, y.y2}) * M.transpose();
}

double area_integral() {
  boost::math::quadrature::tanh_sinh<double> integrator;
  // xc is the signed distance to the nearer endpoint, keeping 1/27 - c3 exact.
  auto f = [](double x, double xc) {
    const double gap = xc > 0.0 ? xc : elliptic::kC3Max - x;
    return elliptic::real_half_periods(x, gap).first;
  };
  // omega1 ~ -1.5 log c3 near 0, so [0, 1e-30] contributes ~1e-28; below that the root gaps underflow.
  return 2.0 * integrator.integrate(f, 1e-30, elliptic::kC3Max);
}

}  // namespace gkcp2::oracle
