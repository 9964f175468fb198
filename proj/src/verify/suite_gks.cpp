#include <algorithm>
#include <cmath>
#include <numbers>

#include "gkcp2/gks.hpp"
#include "gkcp2/oracles.hpp"
#include "suite.hpp"

namespace gkcp2::verify {

namespace {

using namespace gkcp2::gks;
constexpr double kPi = std::numbers::pi;

template <class M>
double max_abs(const M& m) { return m.cwiseAbs().maxCoeff(); }
double rel(const Mat4& a, const Mat4& b) { return max_abs(a - b) / std::max(1.0, max_abs(b)); }

// Max component of dF by 4th-order differences in (c3, s).
double exterior_derivative(const PolarPoint& p, double dt) {
  const double hc = 1e-3 * std::min(p.c3, elliptic::kC3Max - p.c3), hs = 1e-3;
  auto F = [&](double c3, double s) { return F_matrix(elliptic::lattice_from_c3(c3), s, dt); };
  auto d4 = [](auto f, double x, double h) {
    return Mat4((f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h));
  };
  Mat4 dF[4] = {Mat4::Zero(), Mat4::Zero(), Mat4::Zero(), Mat4::Zero()};
  dF[kC3] = d4([&](double c) { return F(c, p.s); }, p.c3, hc);
  dF[kS] = d4([&](double s) { return F(p.c3, s); }, p.s, hs);
  double worst = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        worst = std::max(worst, std::abs(dF[a](b, c) + dF[b](c, a) + dF[c](a, b)));
  return worst;
}

}  // namespace

void run_gks(Suite& s) {
  double i2 = 0, gks1 = 0, gks2 = 0, sym = 0, herm = 0, block = 0, nij_p = 0, nij_m = 0, closed = 0;
  double hitchin = 0, s02 = 0, q11 = 0, omega_anti = 0, period = 0, dsY = 0, anti = 0;
  double chain = 0, pull = 0, qtrans = 0, flowvec = 0;
  for (int i = 0; i < 200; ++i) {
    const PolarPoint p{s.uniform(0.003, 0.035), s.uniform(0.0, 2 * kPi)};
    const double dt = s.uniform(0.01, 2.0);
    const LatticeData lat = elliptic::lattice_from_c3(p.c3);
    const Mat4 Im = J_matrix(lat, p.s), Ip = I_plus_matrix(lat, p.s, dt);
    const Mat4 Q = Q_matrix(lat), F = F_matrix(lat, p.s, dt);
    const Mat4 g = metric_matrix(lat, p.s, dt);
    const Mat4 id = Mat4::Identity();
    i2 = std::max({i2, max_abs(Im * Im + id), max_abs(Ip * Ip + id)});
    gks1 = std::max(gks1, max_abs(Ip - Im + Q * F));
    gks2 = std::max(gks2, max_abs(Im.transpose() * F + F * Ip));
    sym = std::max(sym, max_abs(g - g.transpose()));
    anti = std::max(anti, max_abs(F + F.transpose()));
    herm = std::max({herm, max_abs(Ip.transpose() * g * Ip - g), max_abs(Im.transpose() * g * Im - g)});
    for (const Mat4* I : {&Im, &Ip}) {
      block = std::max({block, max_abs(I->block<2, 2>(0, 0)), max_abs(I->block<2, 2>(2, 2))});
      s02 = std::max(s02, sigma_02_residual(*I, Q));
      q11 = std::max(q11, max_abs(0.5 * (Q + *I * Q * I->transpose())));
      const Mat4 w = I->transpose() * g;
      omega_anti = std::max(omega_anti, max_abs(w + w.transpose()) / std::max(1.0, max_abs(w)));
    }
    const Mat4 comm = Ip * Im - Im * Ip;
    hitchin = std::max(hitchin, rel(comm * g.inverse(), Q));
    period = std::max({period, rel(I_plus_matrix(lat, p.s + 2 * kPi, dt), Ip),
                       rel(F_matrix(lat, p.s + 2 * kPi, dt), F)});
    const YData Y = y_integrals(lat, p.s, dt);
    const double y1_0 = flow::y_of_polar(lat, p.s).y1;
    const double y1_t = flow::y_of_polar(lat, p.s + kPi * dt / lat.omega1).y1;
    dsY = std::max(dsY, std::abs(Y.dY1_ds - lat.omega1 / kPi * (y1_t - y1_0)));
    const Eigen::Vector4d dh(0, 0, -0.25 / p.c3, 0);
    const Eigen::Vector4d v = Q * dh;
    flowvec = std::max(flowvec, (v - Eigen::Vector4d(0, 0, 0, kPi / lat.omega1)).cwiseAbs().maxCoeff());

    nij_p = std::max(nij_p, nijenhuis(FieldKind::I_plus, p, dt));
    if (i < 50) {
      nij_m = std::max(nij_m, nijenhuis(FieldKind::I_minus, p, 0.0));
      closed = std::max(closed, exterior_derivative(p, dt));
    }
    if (i < 20) {
      chain = std::max(chain, rel(oracle::I_minus_chain_rule(p.c3, p.s), Im));
      qtrans = std::max(qtrans, rel(oracle::Q_transport(p.c3, p.s), Q));
      pull = std::max({pull, rel(oracle::I_plus_pullback(p.c3, p.s, dt), Ip),
                       rel(oracle::I_plus_pullback(p.c3, p.s, 0.2), I_plus_matrix(lat, p.s, 0.2))});
    }
  }
  s.check("I_squared", "I_+^2 = I_-^2 = -1", i2, 1e-9);
  s.check("gks_I", "I_+ - I_- + Q F = 0", gks1, 1e-8);
  s.check("gks_II", "I_-^* F + F I_+ = 0", gks2, 1e-8);
  s.check("metric_symmetric", "g symmetric", sym, 1e-12);
  s.check("metric_hermitian", "I_+^T g I_+ = g and I_-^T g I_- = g", herm, 1e-8);
  s.check("block_structure", "diagonal (theta, theta) and ((c3, s), (c3, s)) blocks of I vanish", block, 1e-12);
  s.check("F_antisymmetric", "F antisymmetric", anti, 1e-14);
  s.check("F_closed", "dF = 0 (differences)", closed, 1e-6);
  s.check("nijenhuis_plus", "Nijenhuis tensor of I_+ (differences)", nij_p, 1e-5);
  s.check("nijenhuis_minus", "Nijenhuis tensor of I_- (differences)", nij_m, 1e-5);
  s.check("hitchin_poisson", "Q = [I_+, I_-] g^{-1} (relative)", hitchin, 1e-7);
  s.check("sigma_type", "(0,2) part of sigma = (I Q + i Q)/4 vanishes for I_+ and I_-", s02, 1e-9);
  s.check("Q_type", "(1,1) part of Q vanishes under I_+ and I_-", q11, 1e-9);
  s.check("hermitian_forms", "I^T g antisymmetric for both structures (relative)", omega_anti, 1e-10);
  s.check("s_periodic", "I_+ and F are 2 pi periodic in s", period, 1e-11);
  s.check("dY_ds", "d_s Y^1 = (omega1/pi)(y^1(s + pi dt/omega1) - y^1(s))", dsY, 1e-10);
  s.check("flow_vector", "Q(dh) = (pi/omega1) d_s with h = -log(c3)/4", flowvec, 1e-12);
  s.check("I_minus_chain_rule", "I_- from the (theta, y) complex structure by the chart Jacobian", chain, 1e-8);
  s.check("Q_transport", "Q from the (theta, y) Poisson tensor by the chart Jacobian", qtrans, 1e-8);
  s.check("I_plus_pullback", "I_+ = pullback of I_- through the time-dt flow", pull, 1e-6);

  s.guarded("dt_zero", "at dt = 0: I_+ = I_-, F = 0, g = 0", 1e-15, [] {
    const LatticeData lat = elliptic::lattice_from_c3(0.02);
    return std::max({max_abs(I_plus_matrix(lat, 1.1, 0.0) - J_matrix(lat, 1.1)),
                     max_abs(F_matrix(lat, 1.1, 0.0)), max_abs(metric_matrix(lat, 1.1, 0.0))});
  });
  // F(dt)/dt = C + O(dt); the symmetric quotient cancels the O(dt) term.
  s.guarded("small_dt_law", "F/dt -> d(I^* dh) at dt = 1e-3 (relative, symmetric quotient)", 1e-4, [&] {
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
      const PolarPoint p{s.uniform(0.003, 0.035), s.uniform(0.0, 2 * kPi)};
      const LatticeData lat = elliptic::lattice_from_c3(p.c3);
      const double dt = 1e-3;
      const Mat4 q = (F_matrix(lat, p.s, dt) - F_matrix(lat, p.s, -dt)) / (2 * dt);
      worst = std::max(worst, rel(q, curvature_form_fd(p)));
    }
    return worst;
  });
}

void run_positivity(Suite& s) {
  const GridSpec grid;
  s.guarded("min_eigenvalue", "metric positive on the 20x20x4 grid at dt = 0.05 (negated min eigenvalue)",
            0.0, [&] { return -positivity_scan(0.05, grid).min_eigenvalue; });
  s.guarded("dt_zero", "g = 0 at dt = 0", 1e-15,
            [&] { return std::abs(positivity_scan(0.0, {0.005, 0.032, 4, 4, 1}).min_eigenvalue); });
  s.guarded("curvature_pairing", "g/dt at dt = 1e-3 against I^T C - C I with C = d(I^* dh) (relative)", 1e-2, [&] {
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
      const PolarPoint p{s.uniform(0.005, 0.032), s.uniform(0.0, 2 * kPi)};
      const LatticeData lat = elliptic::lattice_from_c3(p.c3);
      const Mat4 Im = J_matrix(lat, p.s);
      const Mat4 C = curvature_form_fd(p);
      const Mat4 pair = Im.transpose() * C - C * Im;
      worst = std::max(worst, rel(metric_matrix(lat, p.s, 1e-3) / 1e-3, pair));
      const double ev = Eigen::SelfAdjointEigenSolver<Mat4>(0.5 * (pair + pair.transpose())).eigenvalues().minCoeff();
      if (!(ev > 0)) worst = INFINITY;
    }
    return worst;
  });
}

}  // namespace gkcp2::verify
