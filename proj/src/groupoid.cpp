#include "gkcp2/groupoid.hpp"

#include <cmath>
#include <functional>

namespace gkcp2::groupoid {

namespace {

constexpr Complex kI(0.0, 1.0);
enum { Z1 = 0, Z2 = 1, X1 = 2, X2 = 3 };

void set_anti(CMat4& m, int a, int b, Complex v) {
  m(a, b) += v;
  m(b, a) -= v;
}

CMat24 jacobian_fd(const std::function<BasePoint(const GroupoidPoint&)>& f,
                   const GroupoidPoint& g, double h) {
  CMat24 J;
  const CVec4 x = g.vec();
  for (int k = 0; k < 4; ++k) {
    auto at = [&](double step) {
      CVec4 y = x;
      y(k) += step;
      return f(GroupoidPoint::from_vec(y));
    };
    const BasePoint m2 = at(-2.0 * h), m1 = at(-h), p1 = at(h), p2 = at(2.0 * h);
    for (int r = 0; r < 2; ++r) {
      J(r, k) = (m2[r] - 8.0 * m1[r] + 8.0 * p1[r] - p2[r]) / (12.0 * h);
      if (!std::isfinite(J(r, k).real()) || !std::isfinite(J(r, k).imag()))
        throw JacobianError("non-finite finite-difference Jacobian");
    }
  }
  return J;
}

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

CMat4 omega0(const GroupoidPoint& g) {
  CMat4 w = CMat4::Zero();  // i Omega_0
  set_anti(w, Z1, Z2, -g.xi1 * g.xi2);
  set_anti(w, Z1, X2, -g.xi1 * g.z2);
  set_anti(w, Z1, X1, 1.0);
  set_anti(w, Z2, X2, 1.0);
  set_anti(w, Z2, X1, g.xi2 * g.z1);
  set_anti(w, X1, X2, -g.z1 * g.z2);
  return -kI * w;
}

CMat4 pi_bivector(const GroupoidPoint& g) {
  CMat4 p = CMat4::Zero();  // -i Pi
  set_anti(p, X1, Z1, 1.0);
  set_anti(p, X2, Z2, 1.0);
  set_anti(p, X1, X2, -g.xi1 * g.xi2);
  set_anti(p, X1, Z2, g.xi1 * g.z2);
  set_anti(p, X2, Z1, -g.xi2 * g.z1);
  set_anti(p, Z1, Z2, -g.z1 * g.z2);
  return kI * p;
}

BasePoint source(const GroupoidPoint& g) { return {g.z1, g.z2}; }

BasePoint target(const GroupoidPoint& g) {
  return {g.z1 * std::exp(g.xi2 * g.z2), g.z2 * std::exp(-g.xi1 * g.z1)};
}

GroupoidPoint unit(const BasePoint& z) { return {z[0], z[1], 0.0, 0.0}; }

GroupoidPoint compose(const GroupoidPoint& h, const GroupoidPoint& g) {
  const BasePoint tg = target(g);
  const BasePoint sh = source(h);
  if (std::abs(sh[0] - tg[0]) > kComposeTolerance || std::abs(sh[1] - tg[1]) > kComposeTolerance)
    throw ComposabilityError("s(h) != t(g)");
  return {g.z1, g.z2, g.xi1 + h.xi1 * std::exp(g.xi2 * g.z2),
          g.xi2 + h.xi2 * std::exp(-g.xi1 * g.z1)};
}

DarbouxPoint darboux(const GroupoidPoint& g) {
  const Complex a = 0.5 * g.xi2 * g.z2;
  const Complex b = 0.5 * g.xi1 * g.z1;
  return {g.z1 * std::exp(a), g.z2 * std::exp(-b), g.xi1 * std::exp(-a), g.xi2 * std::exp(b)};
}

BasePoint darboux_source(const DarbouxPoint& d) {
  return {d.q1 * std::exp(-0.5 * d.p2 * d.q2), d.q2 * std::exp(0.5 * d.p1 * d.q1)};
}

BasePoint darboux_target(const DarbouxPoint& d) {
  return {d.q1 * std::exp(0.5 * d.p2 * d.q2), d.q2 * std::exp(-0.5 * d.p1 * d.q1)};
}

CMat2 sigma_z(const BasePoint& z) {
  CMat2 s = CMat2::Zero();
  s(0, 1) = kI * z[0] * z[1];
  s(1, 0) = -s(0, 1);
  return s;
}

CMat24 source_jacobian(const GroupoidPoint& g, double h) { return jacobian_fd(source, g, h); }
CMat24 target_jacobian(const GroupoidPoint& g, double h) { return jacobian_fd(target, g, h); }

PushforwardResiduals target_pushforward_check(const GroupoidPoint& g) {
  const CMat24 Js = source_jacobian(g);
  const CMat24 Jt = target_jacobian(g);
  const CMat4 P = pi_bivector(g);
  PushforwardResiduals r;
  r.source_poisson = max_abs(Js * P * Js.transpose() + sigma_z(source(g)));
  r.target_poisson = max_abs(Jt * P * Jt.transpose() - sigma_z(target(g)));
  r.bracket_orthogonality = max_abs(Jt * P * Js.transpose());

  const Eigen::MatrixXcd ks = Eigen::FullPivLU<Eigen::MatrixXcd>(Js).kernel();
  const Eigen::MatrixXcd kt = Eigen::FullPivLU<Eigen::MatrixXcd>(Jt).kernel();
  if (ks.cols() != 2 || kt.cols() != 2) throw JacobianError("projection kernels are not 2-dimensional");
  Eigen::MatrixXcd ksn = ks, ktn = kt;
  for (int c = 0; c < 2; ++c) {
    ksn.col(c).normalize();
    ktn.col(c).normalize();
  }
  r.kernel_orthogonality = max_abs(ksn.transpose() * omega0(g) * ktn);
  return r;
}

CMat4 toy_omega(Complex x, Complex y, Complex u, Complex v) {
  enum { X = 0, Y = 1, U = 2, V = 3 };
  CMat4 w = CMat4::Zero();
  set_anti(w, X, Y, u * v);
  set_anti(w, X, U, v * y);
  set_anti(w, X, V, -1.0);
  set_anti(w, Y, U, 1.0);
  set_anti(w, Y, V, -u * x);
  set_anti(w, U, V, -x * y);
  return w;
}

GroupoidPoint change_chart(const GroupoidPoint& g, const Eigen::Matrix2i& A) {
  auto pw = [](Complex z, int k) { return std::pow(z, k); };
  const Complex t1 = pw(g.z1, A(0, 0)) * pw(g.z2, A(0, 1));
  const Complex t2 = pw(g.z1, A(1, 0)) * pw(g.z2, A(1, 1));
  const Eigen::Matrix2d AinvT = A.cast<double>().inverse().transpose();
  const Eigen::Vector2cd zx(g.z1 * g.xi1, g.z2 * g.xi2);
  const Eigen::Vector2cd tzx = AinvT.cast<Complex>() * zx;
  return {t1, t2, tzx(0) / t1, tzx(1) / t2};
}

}  // namespace gkcp2::groupoid
