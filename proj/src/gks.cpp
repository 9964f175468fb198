#include "gkcp2/gks.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace gkcp2::gks {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;
using CMat4 = Eigen::Matrix4cd;

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

// Cofactor of the theta-rows shift in the plus structure.
double shift_coefficient(const LatticeData& lat, double dt) {
  const double c3 = lat.c3;
  return 3.0 * lat.tilde_eta1 * kPi * dt /
         (lat.omega1 * lat.omega1 * c3 * (1.0 - 27.0 * c3));
}

// 4th-order central difference of a matrix-valued function of one variable.
Mat4 diff4(const std::function<Mat4(double)>& f, double x, double h) {
  return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
}

double c3_step(double c3) { return 1e-3 * std::min(c3, elliptic::kC3Max - c3); }

}  // namespace

std::string to_string(FieldKind k) {
  switch (k) {
    case FieldKind::I_minus: return "I_minus";
    case FieldKind::I_plus: return "I_plus";
    case FieldKind::Q: return "Q";
    case FieldKind::F: return "F";
    case FieldKind::g: return "g";
    case FieldKind::sigma_plus_re: return "sigma_plus_re";
    case FieldKind::sigma_plus_im: return "sigma_plus_im";
  }
  return "unknown";
}

FieldKind field_kind_from_string(const std::string& name) {
  for (FieldKind k : {FieldKind::I_minus, FieldKind::I_plus, FieldKind::Q, FieldKind::F,
                      FieldKind::g, FieldKind::sigma_plus_re, FieldKind::sigma_plus_im})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown field kind: " + name);
}

Mat4 J_matrix(const LatticeData& lat, double s) {
  const double c3 = lat.c3;
  const double w1 = lat.omega1;
  const flow::TriplePoint y = flow::y_of_polar(lat, s);
  const double vs = elliptic::varsigma(s, lat);
  const double D = 4.0 * c3 * (1.0 - 27.0 * c3);
  const double r = 4.0 * kPi * c3 / w1;
  Mat4 m = Mat4::Zero();
  m(kTheta1, kS) = w1 / (2.0 * kPi) * (3.0 * y.y2 - 1.0);
  m(kTheta2, kS) = w1 / (2.0 * kPi) * (1.0 - 3.0 * y.y1);
  m(kTheta1, kC3) = (1.0 + 3.0 * y.y2 - 18.0 * y.y1 * y.y2 - 6.0 * vs * (1.0 - 3.0 * y.y2)) / D;
  m(kTheta2, kC3) = (1.0 + 3.0 * y.y1 - 18.0 * y.y1 * y.y2 + 6.0 * vs * (1.0 - 3.0 * y.y1)) / D;
  m(kC3, kTheta1) = -r * m(kTheta2, kS);
  m(kC3, kTheta2) = r * m(kTheta1, kS);
  m(kS, kTheta1) = r * m(kTheta2, kC3);
  m(kS, kTheta2) = -r * m(kTheta1, kC3);
  return m;
}

Mat4 I_plus_matrix(const LatticeData& lat, double s, double dt) {
  Mat4 m = J_matrix(lat, s + kPi * dt / lat.omega1);
  const double k = shift_coefficient(lat, dt);
  for (int i : {kTheta1, kTheta2}) {
    m(i, kC3) += m(i, kS) * k;
    m(kS, i) -= m(kC3, i) * k;
  }
  return m;
}

Mat4 Q_matrix(const LatticeData& lat) {
  Mat4 q = Mat4::Zero();
  const double r = 4.0 * lat.c3 * kPi / lat.omega1;
  q(kC3, kS) = r;
  q(kS, kC3) = -r;
  q(kTheta1, kTheta2) = -1.0;
  q(kTheta2, kTheta1) = 1.0;
  return q;
}

YData y_integrals(const LatticeData& lat, double s, double dt) {
  YData d;
  if (dt == 0.0) return d;
  const Complex T = lat.omega2() + s * lat.omega1 / kPi;
  const double tau = lat.tertiary();
  const elliptic::PeriodDerivatives pd = elliptic::d_c3_periods(lat);
  const Complex Tdot(pd.d_omega1 * s / kPi, pd.d_omega2_im);
  const double tau_dot = 2.0 / 3.0 * pd.d_omega1;
  const double zeta_tau = elliptic::zeta_w(tau, lat).real();
  const double lin = dt * (0.5 - zeta_tau);
  const double lin_dot = -dt * 2.0 / 3.0 * pd.d_eta1;

  // Signed sums of log sigma, zeta and the total c3-derivative over the
  // points T + a tau + b dt.
  struct Term {
    double a, b, sign;
  };
  auto accumulate = [&](std::initializer_list<Term> terms, double& Y, double& dYc, double& dYs) {
    Complex L = 0.0, Z = 0.0, Dc = 0.0;
    for (const Term& t : terms) {
      const Complex z = T + t.a * tau + t.b * dt;
      const Complex zdot = Tdot + t.a * tau_dot;
      const Complex zeta = elliptic::zeta_w(z, lat);
      L += t.sign * elliptic::log_sigma_w(z, lat);
      Z += t.sign * zeta;
      Dc += t.sign * (elliptic::d_c3_log_sigma(z, lat) + zeta * zdot);
    }
    Y = L.real() + lin;
    dYs = lat.omega1 / kPi * Z.real();
    dYc = Dc.real() + lin_dot;
  };
  accumulate({{0, 1, 1}, {-1, 0, 1}, {-1, 1, -1}, {0, 0, -1}}, d.Y1, d.dY1_dc3, d.dY1_ds);
  accumulate({{1, 1, 1}, {0, 0, 1}, {0, 1, -1}, {1, 0, -1}}, d.Y2, d.dY2_dc3, d.dY2_ds);
  return d;
}

Mat4 F_matrix(const LatticeData& lat, double s, double dt) {
  const YData y = y_integrals(lat, s, dt);
  Mat4 f = Mat4::Zero();
  auto put = [&](int th, double dc3, double ds) {
    f(kC3, th) = -1.5 * dc3;
    f(th, kC3) = 1.5 * dc3;
    f(kS, th) = -1.5 * ds;
    f(th, kS) = 1.5 * ds;
  };
  put(kTheta1, y.dY1_dc3, y.dY1_ds);
  put(kTheta2, y.dY2_dc3, y.dY2_ds);
  return f;
}

Mat4 metric_matrix(const LatticeData& lat, double s, double dt) {
  const Mat4 I = J_matrix(lat, s);
  const Mat4 F = F_matrix(lat, s, dt);
  return I.transpose() * F - F * I;
}

namespace {

FieldSample make(FieldKind kind, const PolarPoint& p, double dt, const Mat4& m) {
  return {p, kind, m, dt};
}

}  // namespace

FieldSample I_minus(const PolarPoint& p) {
  const LatticeData lat = elliptic::lattice_from_c3(p.c3);
  return make(FieldKind::I_minus, p, 0.0, J_matrix(lat, p.s));
}

FieldSample Q_polar(const PolarPoint& p) {
  const LatticeData lat = elliptic::lattice_from_c3(p.c3);
  return make(FieldKind::Q, p, 0.0, Q_matrix(lat));
}

FieldSample I_plus(const PolarPoint& p, double dt) {
  const LatticeData lat = elliptic::lattice_from_c3(p.c3);
  return make(FieldKind::I_plus, p, dt, I_plus_matrix(lat, p.s, dt));
}

FieldSample F_two_form(const PolarPoint& p, double dt) {
  const LatticeData lat = elliptic::lattice_from_c3(p.c3);
  return make(FieldKind::F, p, dt, F_matrix(lat, p.s, dt));
}

FieldSample metric(const PolarPoint& p, double dt) {
  const LatticeData lat = elliptic::lattice_from_c3(p.c3);
  return make(FieldKind::g, p, dt, metric_matrix(lat, p.s, dt));
}

FieldSample sample(FieldKind kind, const PolarPoint& p, double dt) {
  switch (kind) {
    case FieldKind::I_minus: return I_minus(p);
    case FieldKind::I_plus: return I_plus(p, dt);
    case FieldKind::Q: return Q_polar(p);
    case FieldKind::F: return F_two_form(p, dt);
    case FieldKind::g: return metric(p, dt);
    case FieldKind::sigma_plus_re: return sigma_pm(p, dt, true).first;
    case FieldKind::sigma_plus_im: return sigma_pm(p, dt, true).second;
  }
  throw std::invalid_argument("unknown field kind");
}

std::pair<FieldSample, FieldSample> sigma_pm(const PolarPoint& p, double dt, bool plus) {
  const LatticeData lat = elliptic::lattice_from_c3(p.c3);
  const Mat4 I = plus ? I_plus_matrix(lat, p.s, dt) : J_matrix(lat, p.s);
  const Mat4 Q = Q_matrix(lat);
  return {make(FieldKind::sigma_plus_re, p, dt, 0.25 * I * Q),
          make(FieldKind::sigma_plus_im, p, dt, 0.25 * Q)};
}

double sigma_02_residual(const Mat4& I, const Mat4& Q) {
  const CMat4 sigma = 0.25 * (I * Q).cast<Complex>() + Complex(0.0, 0.25) * Q.cast<Complex>();
  const CMat4 P = 0.5 * (CMat4::Identity() + Complex(0.0, 1.0) * I.cast<Complex>());
  return (P * sigma * P.transpose()).cwiseAbs().maxCoeff();
}

double nijenhuis(FieldKind kind, const PolarPoint& p, double dt,
                 const elliptic::GuardBand& guard) {
  if (kind != FieldKind::I_minus && kind != FieldKind::I_plus)
    throw std::invalid_argument("Nijenhuis tensor needs a complex structure");
  const double hc = c3_step(p.c3);
  const double hs = 1e-3;
  if (p.c3 - 2.0 * hc < guard.lo || p.c3 + 2.0 * hc > guard.hi)
    throw StencilError("c3 stencil leaves the admissible band");
  auto field = [&](double c3, double s) {
    const LatticeData lat = elliptic::lattice_from_c3(c3, guard);
    return kind == FieldKind::I_minus ? J_matrix(lat, s) : I_plus_matrix(lat, s, dt);
  };
  const Mat4 I = field(p.c3, p.s);
  Mat4 dI[4] = {Mat4::Zero(), Mat4::Zero(), Mat4::Zero(), Mat4::Zero()};
  dI[kC3] = diff4([&](double c) { return field(c, p.s); }, p.c3, hc);
  dI[kS] = diff4([&](double s) { return field(p.c3, s); }, p.s, hs);

  // N^k_ij = I^l_i d_l I^k_j - I^l_j d_l I^k_i - I^k_l (d_i I^l_j - d_j I^l_i)
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        double n = 0.0;
        for (int l = 0; l < 4; ++l) {
          n += I(l, i) * dI[l](k, j) - I(l, j) * dI[l](k, i);
          n -= I(k, l) * (dI[i](l, j) - dI[j](l, i));
        }
        worst = std::max(worst, std::abs(n));
      }
  return worst;
}

GksReport gks_report(const PolarPoint& p, double dt, bool with_nijenhuis) {
  const LatticeData lat = elliptic::lattice_from_c3(p.c3);
  const Mat4 Im = J_matrix(lat, p.s);
  const Mat4 Ip = I_plus_matrix(lat, p.s, dt);
  const Mat4 Q = Q_matrix(lat);
  const Mat4 F = F_matrix(lat, p.s, dt);
  const Mat4 g = Im.transpose() * F - F * Im;
  const Mat4 id = Mat4::Identity();

  GksReport r;
  r.residual_GKS_I = max_abs(Ip - Im + Q * F);
  r.residual_GKS_II = max_abs(Im.transpose() * F + F * Ip);
  r.residual_I2 = std::max(max_abs(Im * Im + id), max_abs(Ip * Ip + id));
  r.residual_hermitian_plus = max_abs(Ip.transpose() * g * Ip - g);
  r.residual_hermitian_minus = max_abs(Im.transpose() * g * Im - g);
  r.residual_symmetry = max_abs(g - g.transpose());
  for (const Mat4* I : {&Im, &Ip})
    r.residual_block = std::max({r.residual_block, I->block<2, 2>(0, 0).cwiseAbs().maxCoeff(),
                                 I->block<2, 2>(2, 2).cwiseAbs().maxCoeff()});
  const Mat4 gs = 0.5 * (g + g.transpose());
  r.min_metric_eigenvalue = Eigen::SelfAdjointEigenSolver<Mat4>(gs).eigenvalues().minCoeff();
  if (with_nijenhuis) r.nijenhuis_max = nijenhuis(FieldKind::I_plus, p, dt);
  return r;
}

PositivityReport positivity_scan(double dt, const GridSpec& grid) {
  if (grid.n_c3 < 2 || grid.n_s < 1 || grid.n_theta < 1)
    throw DomainError("grid sizes must be positive (n_c3 >= 2)");
  elliptic::check_c3(grid.c3_lo);
  elliptic::check_c3(grid.c3_hi);
  PositivityReport rep;
  rep.min_eigenvalue = INFINITY;
  for (int a = 0; a < grid.n_c3; ++a) {
    const double c3 = grid.c3_lo + (grid.c3_hi - grid.c3_lo) * a / (grid.n_c3 - 1);
    const LatticeData lat = elliptic::lattice_from_c3(c3);
    for (int b = 0; b < grid.n_s; ++b) {
      const double s = 2.0 * kPi * b / grid.n_s;
      const Mat4 g = metric_matrix(lat, s, dt);
      const double ev =
          Eigen::SelfAdjointEigenSolver<Mat4>(0.5 * (g + g.transpose())).eigenvalues().minCoeff();
      for (int t = 0; t < grid.n_theta; ++t) {
        ++rep.samples;
        if (ev < rep.min_eigenvalue) {
          rep.min_eigenvalue = ev;
          rep.argmin = {c3, s};
        }
      }
    }
  }
  return rep;
}

Mat4 curvature_form_fd(const PolarPoint& p, double h_c3, double h_s) {
  if (h_c3 <= 0.0) h_c3 = c3_step(p.c3);
  // alpha_b = I^{c3}_b dh_{c3}, dh = -dc3 / (4 c3); only theta components survive.
  auto alpha = [&](double c3, double s) {
    const Mat4 J = J_matrix(elliptic::lattice_from_c3(c3), s);
    Mat4 a = Mat4::Zero();
    a.row(0) = J.row(kC3) * (-0.25 / c3);
    return a;
  };
  const Mat4 dc = diff4([&](double c) { return alpha(c, p.s); }, p.c3, h_c3);
  const Mat4 ds = diff4([&](double s) { return alpha(p.c3, s); }, p.s, h_s);
  Mat4 f = Mat4::Zero();
  for (int b = 0; b < 4; ++b) {
    f(kC3, b) += dc(0, b);
    f(b, kC3) -= dc(0, b);
    f(kS, b) += ds(0, b);
    f(b, kS) -= ds(0, b);
  }
  return f;
}

}  // namespace gkcp2::gks
