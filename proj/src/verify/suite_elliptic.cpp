#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "gkcp2/elliptic.hpp"
#include "gkcp2/flow.hpp"
#include "gkcp2/oracles.hpp"
#include "suite.hpp"

namespace gkcp2::verify {

namespace {

using elliptic::Complex;
using elliptic::LatticeData;
constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

std::vector<double> interior_grid(int n) {
  std::vector<double> c;
  for (int k = 1; k <= n; ++k) c.push_back(elliptic::kC3Max * k / (n + 1));
  return c;
}

// Random z in the period cell, kept away from the pole lattice.
Complex random_z(Suite& s, const LatticeData& lat) {
  for (;;) {
    const Complex z = s.uniform(-1.0, 1.0) * lat.omega1 + s.uniform(-1.0, 1.0) * lat.omega2();
    if (elliptic::pole_distance(z, lat) > 0.05 * lat.omega1) return z;
  }
}

}  // namespace

void run_elliptic(Suite& s) {
  const std::vector<double> grid = interior_grid(25);
  double disc = 0, order = 0, vieta = 0, half = 0, legendre = 0, tilde = 0, jinv = 0;
  double ode = 0, periodic = 0, quasi = 0, sigma_q = 0, sigma_d = 0;
  double tert = 0, sixth = 0, special = 0, quartic = 0, zeta_sp = 0, segment = 0;
  double vs_zero = 0, vs_odd = 0, vs_shift = 0, vs_real = 0, vs_period = 0;
  using Big = boost::multiprecision::cpp_bin_float_50;
  for (double c3 : grid) {
    const LatticeData lat = elliptic::lattice_from_c3(c3);
    const Big bc = c3, bg2 = Big(1) / 12 - 2 * bc, bg3 = bc / 6 - Big(1) / 216 - bc * bc;
    const double exact = static_cast<double>(bg2 * bg2 * bg2 - 27 * bg3 * bg3);
    disc = std::max(disc, std::abs(lat.discriminant - exact) / exact);
    order = std::max(order, (lat.e1 > lat.e3 && lat.e3 > lat.e2) ? 0.0 : 1.0);
    vieta = std::max({vieta, std::abs(lat.e1 + lat.e2 + lat.e3),
                      std::abs(lat.e1 * lat.e2 * lat.e3 - lat.g3 / 4.0),
                      std::abs(lat.e1 * lat.e2 + lat.e2 * lat.e3 + lat.e3 * lat.e1 + lat.g2 / 4.0)});
    half = std::max({half, rel(elliptic::wp(lat.omega1, lat), lat.e1),
                     rel(elliptic::wp(lat.omega2(), lat), lat.e2),
                     rel(elliptic::wp(lat.omega1 + lat.omega2(), lat), lat.e3)});
    legendre = std::max(legendre, std::abs(lat.eta1 * lat.omega2_im - lat.eta2_im * lat.omega1 - kPi / 2));
    const double k = 1.0 / 12.0 - 3.0 * c3;
    tilde = std::max({tilde, std::abs(lat.tilde_eta1 - lat.eta1 - lat.omega1 * k),
                      std::abs(lat.tilde_eta2_im - lat.eta2_im - lat.omega2_im * k)});
    jinv = std::max({jinv, std::abs(lat.j_invariant - 1728.0 * std::pow(lat.g2, 3) / exact) / lat.j_invariant,
                     lat.j_invariant >= 1728.0 * (1 - 1e-14) ? 0.0 : 1.0});

    for (int i = 0; i < 50; ++i) {
      const Complex z = random_z(s, lat);
      const auto w = elliptic::evaluate(z, lat);
      const Complex rhs = 4.0 * w.wp * w.wp * w.wp - lat.g2 * w.wp - lat.g3;
      ode = std::max(ode, std::abs(w.wp_prime * w.wp_prime - rhs) /
                              std::max({std::abs(rhs), std::abs(4.0 * w.wp * w.wp * w.wp), 1e-300}));
      const Complex two_w1 = 2.0 * lat.omega1, two_w2 = 2.0 * lat.omega2();
      periodic = std::max({periodic, rel(elliptic::wp(z + two_w1, lat), w.wp),
                           rel(elliptic::wp(z + two_w2, lat), w.wp)});
      quasi = std::max({quasi, rel(elliptic::zeta_w(z + two_w1, lat), w.zeta + 2.0 * lat.eta1),
                        rel(elliptic::zeta_w(z + two_w2, lat), w.zeta + 2.0 * lat.eta2())});
      // sigma(z + 2 w_i) = -exp(2 eta_i (z + w_i)) sigma(z)
      const Complex sg = elliptic::sigma_w(z, lat);
      sigma_q = std::max({sigma_q,
                          rel(elliptic::sigma_w(z + two_w1, lat), -std::exp(2.0 * lat.eta1 * (z + lat.omega1)) * sg),
                          rel(elliptic::sigma_w(z + two_w2, lat), -std::exp(2.0 * lat.eta2() * (z + lat.omega2())) * sg)});
      if (i < 10) {
        const double h = 2e-4 * lat.omega1;
        auto ls = [&](double x) { return elliptic::log_sigma_w(z + x, lat); };
        const Complex d = (ls(-2 * h) - 8.0 * ls(-h) + 8.0 * ls(h) - ls(2 * h)) / (12.0 * h);
        sigma_d = std::max(sigma_d, rel(d, w.zeta));
      }
    }

    const double tf = lat.tertiary();
    tert = std::max({tert, std::abs(elliptic::wp(tf, lat) - 1.0 / 12.0),
                     std::abs(elliptic::wp_prime(tf, lat) + c3)});
    const auto tv = elliptic::tertiary_values(lat);
    auto closed = [&](double e) { return (27 * c3 + 6 * e - 72 * c3 * e + 72 * e * e - 1) / (36 * c3); };
    const double p_half = elliptic::wp(tf / 2, lat).real();
    const double p_w2 = elliptic::wp(lat.omega2() + tf, lat).real();
    sixth = std::max({sixth, std::abs(p_half - closed(lat.e1)) / std::max(1.0, std::abs(p_half)),
                      std::abs(p_w2 - closed(lat.e2)) / std::max(1.0, std::abs(p_w2)),
                      std::abs(elliptic::wp_prime(tf / 2, lat).real() + (3 * c3 + p_half - 1.0 / 12)),
                      std::abs(elliptic::wp_prime(lat.omega2() + tf, lat).real() - (3 * c3 + p_w2 - 1.0 / 12)),
                      std::abs(tv.wp_tf_half - p_half), std::abs(tv.wp_w2_plus_tf - p_w2)});
    const double a = 1.0 / 12 - p_half;
    special = std::max(special, std::abs(a * a * lat.twelfth_minus_e1 - c3 * c3) / (c3 * c3));
    const double x = elliptic::wp(tf, lat).real();
    quartic = std::max(quartic, std::abs(std::pow(x, 4) - lat.g2 * x * x / 2 - lat.g3 * x -
                                         lat.g2 * lat.g2 / 48));
    zeta_sp = std::max({zeta_sp, std::abs(elliptic::zeta_w(tf, lat) - (1.0 / 6 + 2.0 / 3 * lat.eta1)),
                        std::abs(elliptic::zeta_w(2 * tf, lat) - (-1.0 / 6 + 4.0 / 3 * lat.eta1))});
    for (int i = 1; i < 20; ++i) {
      const Complex v = elliptic::wp(lat.omega2() + 2.0 * lat.omega1 * i / 20.0, lat);
      segment = std::max({segment, std::abs(v.imag()), v.real() < 1.0 / 12 ? 0.0 : 1.0});
    }

    vs_zero = std::max(vs_zero, std::abs(elliptic::varsigma(0.0, lat)));
    for (int i = 0; i < 10; ++i) {
      const double sv = s.uniform(0.0, 2 * kPi);
      const double v = elliptic::varsigma(sv, lat);
      vs_odd = std::max(vs_odd, std::abs(elliptic::varsigma(-sv, lat) + v));
      vs_period = std::max(vs_period, std::abs(elliptic::varsigma(sv + 2 * kPi, lat) - v));
      const flow::TriplePoint y = flow::y_of_polar(lat, sv);
      vs_shift = std::max({vs_shift, std::abs(elliptic::varsigma(sv + 2 * kPi / 3, lat) - v - (y.y2 - 1.0 / 3)),
                           std::abs(elliptic::varsigma(sv - 2 * kPi / 3, lat) - v + (y.y1 - 1.0 / 3))});
      const Complex full = elliptic::zeta_w(lat.omega2() + sv * lat.omega1 / kPi, lat) - lat.eta2() -
                           sv * lat.eta1 / kPi;
      vs_real = std::max(vs_real, std::abs(full.imag()));
    }
  }
  s.check("discriminant", "discriminant c3^3 (1 - 27 c3) against g2^3 - 27 g3^2 (relative)", disc, 1e-14);
  s.check("root_order", "root ordering e1 > e3 > e2", order, 0.5);
  s.check("vieta", "root symmetric functions against g2, g3", vieta, 1e-14);
  s.check("half_period_values", "wp at the half periods equals the roots", half, 1e-11);
  s.check("legendre", "Legendre relation eta1 omega2 - eta2 omega1 = i pi/2", legendre, 1e-12);
  s.check("tilde_eta", "tilde eta_i = eta_i + omega_i (1/12 - 3 c3)", tilde, 1e-13);
  s.check("j_invariant", "j = 1728 g2^3 / discriminant and j >= 1728", jinv, 1e-12);
  s.check("wp_ode", "wp'^2 = 4 wp^3 - g2 wp - g3 (relative, 50 random z)", ode, 1e-10);
  s.check("wp_periodic", "double periodicity of wp", periodic, 1e-10);
  s.check("zeta_quasi", "zeta(z + 2 omega_i) = zeta(z) + 2 eta_i", quasi, 1e-10);
  s.check("sigma_quasi", "sigma(z + 2 omega_i) = -exp(2 eta_i (z + omega_i)) sigma(z)", sigma_q, 1e-10);
  s.check("sigma_log_derivative", "d log sigma / dz = zeta (finite differences)", sigma_d, 1e-8);
  s.check("tertiary_value", "wp(2 omega1/3) = 1/12 and wp'(2 omega1/3) = -c3", tert, 1e-10);
  s.check("sixth_period_closed_forms", "closed forms of wp, wp' at tau/2 and omega2 + tau", sixth, 1e-10);
  s.check("special_point_product", "(1/12 - wp(tau/2))^2 (1/12 - e1) = c3^2", special, 1e-10);
  s.check("tertiary_quartic", "wp(2 omega1/3) solves x^4 - g2 x^2/2 - g3 x - g2^2/48", quartic, 1e-12);
  s.check("zeta_special_values", "zeta(2w1/3) = 1/6 + 2 eta1/3, zeta(4w1/3) = -1/6 + 4 eta1/3", zeta_sp, 1e-10);
  s.check("segment_real", "wp real and below 1/12 on omega2 + (0, 2 omega1)", segment, 1e-11);
  s.check("varsigma_zero", "varsigma(0) = 0", vs_zero, 1e-12);
  s.check("varsigma_odd", "varsigma(-s) = -varsigma(s)", vs_odd, 1e-11);
  s.check("varsigma_periodic", "varsigma(s + 2 pi) = varsigma(s)", vs_period, 1e-11);
  s.check("varsigma_shift", "varsigma(s +- 2pi/3) - varsigma(s) = +-(y - 1/3)", vs_shift, 1e-10);
  s.check("varsigma_real", "imaginary residue of varsigma", vs_real, 1e-11);

  s.guarded("j_minimum", "j = 1728 at c3 = 1/12 - sqrt(3)/36", 1e-10, [] {
    const LatticeData lat = elliptic::lattice_from_c3(1.0 / 12 - kSqrt3 / 36);
    return std::abs(lat.j_invariant - 1728.0) / 1728.0;
  });
  s.guarded("lattice_sum_oracle", "theta evaluation against the direct lattice sum of wp", 1e-8, [&] {
    double worst = 0;
    for (double c3 : {0.004, 1.0 / 54, 0.033}) {
      const LatticeData lat = elliptic::lattice_from_c3(c3);
      std::vector<Complex> zs = {0.31 * lat.omega1 + 0.47 * lat.omega2()};
      for (int i = 0; i < 20; ++i) zs.push_back(random_z(s, lat));
      for (Complex z : zs) worst = std::max(worst, rel(elliptic::wp(z, lat), oracle::lattice_sum_wp(z, lat)));
    }
    return worst;
  });
  s.guarded("period_integral_oracle", "omega1 against the period integral at c3 = 1/54", 1e-9, [] {
    const LatticeData lat = elliptic::lattice_from_c3(1.0 / 54);
    return std::abs(lat.omega1 - oracle::period_integral_omega1(lat.g2, lat.g3)) / lat.omega1;
  });
  s.guarded("d_c3_fixed_z", "c3-derivatives of wp, zeta, log sigma at fixed z (differences)", 1e-6, [] {
    const double c3 = 1.0 / 54, h = 1e-5 * c3;
    const LatticeData lat = elliptic::lattice_from_c3(c3);
    const Complex z = lat.omega2() + 0.4 * lat.omega1;
    const LatticeData lp = elliptic::lattice_from_c3(c3 + h), lm = elliptic::lattice_from_c3(c3 - h);
    auto cd = [&](auto f) { return (f(z, lp) - f(z, lm)) / (2 * h); };
    return std::max({rel(elliptic::d_c3_wp(z, lat), cd([](Complex w, const LatticeData& l) { return elliptic::wp(w, l); })),
                     rel(elliptic::d_c3_zeta(z, lat), cd([](Complex w, const LatticeData& l) { return elliptic::zeta_w(w, l); })),
                     rel(elliptic::d_c3_log_sigma(z, lat), cd([](Complex w, const LatticeData& l) { return elliptic::log_sigma_w(w, l); }))});
  });
  s.guarded("tertiary_total_derivative", "d/dc3 wp(2 omega1(c3)/3) = 0", 1e-9, [&] {
    double worst = 0;
    for (double c3 : grid) {
      const LatticeData lat = elliptic::lattice_from_c3(c3);
      const double tf = lat.tertiary();
      const double d = (elliptic::d_c3_wp(tf, lat) +
                        elliptic::wp_prime(tf, lat) * (2.0 / 3) * elliptic::d_c3_periods(lat).d_omega1).real();
      worst = std::max(worst, std::abs(d) / std::max(1.0, std::abs(elliptic::d_c3_wp(tf, lat))));
    }
    return worst;
  });
  s.guarded("zeta_chain_rule", "d_c3 zeta at omega1 = d eta1 + e1 d omega1", 1e-9, [&] {
    double worst = 0;
    for (double c3 : grid) {
      const LatticeData lat = elliptic::lattice_from_c3(c3);
      const auto pd = elliptic::d_c3_periods(lat);
      const Complex lhs = elliptic::d_c3_zeta(lat.omega1, lat);
      worst = std::max(worst, rel(lhs, pd.d_eta1 + lat.e1 * pd.d_omega1));
    }
    return worst;
  });
}

void run_limits(Suite& s) {
  // Richardson: polynomial extrapolation in the distance to the endpoint.
  const std::vector<double> eps = {1e-3, 2e-3, 4e-3, 8e-3};
  std::vector<double> w1, w2, e1, te2;
  for (double e : eps) {
    const LatticeData hi = elliptic::lattice_from_c3(elliptic::kC3Max - e);
    const LatticeData lo = elliptic::lattice_from_c3(e);
    w1.push_back(hi.omega1);
    e1.push_back(hi.eta1);
    w2.push_back(lo.omega2_im);
  }
  s.check("omega1_upper", "omega1 -> sqrt(3) pi as c3 -> 1/27",
          std::abs(oracle::extrapolate_to_zero(eps, w1) - kSqrt3 * kPi), 1e-4);
  s.check("omega2_lower", "omega2 -> i pi as c3 -> 0",
          std::abs(oracle::extrapolate_to_zero(eps, w2) - kPi), 1e-4);
  s.check("eta1_upper", "eta1 -> sqrt(3) pi / 36 as c3 -> 1/27",
          std::abs(oracle::extrapolate_to_zero(eps, e1) - kSqrt3 * kPi / 36), 1e-4);
}

void run_period_ode(Suite& s) {
  double first = 0, second = 0, trace = 0;
  for (double c3 : {0.004, 0.012, 1.0 / 54, 0.026, 0.034}) {
    const LatticeData lat = elliptic::lattice_from_c3(c3);
    const auto pd = elliptic::d_c3_periods(lat);
    const double h = 1e-5 * c3;
    const LatticeData lp = elliptic::lattice_from_c3(c3 + h), lm = elliptic::lattice_from_c3(c3 - h);
    auto fd = [&](auto field) { return (field(lp) - field(lm)) / (2 * h); };
    auto chk = [&](double analytic, double numeric) {
      first = std::max(first, std::abs(analytic - numeric) / std::max(std::abs(numeric), 1e-300));
    };
    chk(pd.d_omega1, fd([](const LatticeData& l) { return l.omega1; }));
    chk(pd.d_omega2_im, fd([](const LatticeData& l) { return l.omega2_im; }));
    chk(pd.d_eta1, fd([](const LatticeData& l) { return l.eta1; }));
    chk(pd.d_eta2_im, fd([](const LatticeData& l) { return l.eta2_im; }));
    chk(pd.d_tilde_eta1, fd([](const LatticeData& l) { return l.tilde_eta1; }));
    chk(pd.d_tilde_eta2_im, fd([](const LatticeData& l) { return l.tilde_eta2_im; }));
    const double D = c3 * (1 - 27 * c3);
    first = std::max({first, std::abs(pd.d_tilde_eta1 + 2 * lat.omega1) / lat.omega1,
                      std::abs(pd.d_omega1 + 3 * lat.tilde_eta1 / D) / std::abs(pd.d_omega1)});
    trace = std::max(trace, std::abs(pd.d_eta1 * lat.omega2_im + lat.eta1 * pd.d_omega2_im -
                                     pd.d_eta2_im * lat.omega1 - lat.eta2_im * pd.d_omega1));
    // d/dc3 (c3 (1 - 27 c3) d omega1/dc3) = 6 omega1 by a second difference
    const double H = 1e-4 * c3;
    auto w = [](double c) { return elliptic::lattice_from_c3(c).omega1; };
    auto p = [](double c) { return c * (1 - 27 * c); };
    const double w0 = w(c3);
    const double lhs = (p(c3 + H / 2) * (w(c3 + H) - w0) - p(c3 - H / 2) * (w0 - w(c3 - H))) / (H * H);
    second = std::max(second, std::abs(lhs - 6 * w0) / (6 * w0));
  }
  s.check("first_order", "c3-derivatives of periods and quasi-periods against differences (relative)", first, 1e-6);
  s.check("second_order", "d/dc3 (c3 (1 - 27 c3) d omega1/dc3) = 6 omega1 (relative)", second, 1e-5);
  s.check("traceless", "Legendre pairing constant along c3", trace, 1e-10);
}

void run_area(Suite& s) {
  s.guarded("area", "2 int_0^{1/27} omega1 dc3 = 1/2", 1e-6,
            [] { return std::abs(oracle::area_integral() - 0.5); });
}

}  // namespace gkcp2::verify
