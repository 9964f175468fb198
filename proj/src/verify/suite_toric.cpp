#include <algorithm>
#include <cmath>

#include "gkcp2/toric.hpp"
#include "suite.hpp"

namespace gkcp2::verify {

namespace {

using namespace gkcp2::toric;

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

MomentPoint random_cp2_point(Suite& s) {
  const double y1 = s.uniform(0.02, 0.96);
  return {y1, s.uniform(0.02, 0.98 - y1)};
}

// d(z1, z2)/d(theta, y) at the corner between faces a and a+1 (holomorphic part).
Eigen::Matrix<Complex, 2, 4> corner_jacobian(const DelzantPolygon& poly, int a, const MomentPoint& y,
                                             const Vec2& theta) {
  const GuilleminData d = guillemin(poly, y);
  const std::size_t n = poly.normals.size();
  const IVec2& u1 = poly.normals[a];
  const IVec2& u2 = poly.normals[(a + 1) % n];
  const auto cc = complex_coords(poly, y, theta)[a];
  const Eigen::Matrix2d C{{double(u2.y()), -double(u2.x())}, {-double(u1.y()), double(u1.x())}};
  const Complex I(0.0, 1.0);
  Eigen::Matrix<Complex, 2, 4> J;
  const Eigen::Matrix2d dy = C * d.hess;  // d log z / d y
  for (int r = 0; r < 2; ++r) {
    const Complex z = r == 0 ? cc.z1 : cc.z2;
    J(r, 0) = I * C(r, 0) * z;
    J(r, 1) = I * C(r, 1) * z;
    J(r, 2) = dy(r, 0) * z;
    J(r, 3) = dy(r, 1) * z;
  }
  return J;
}

}  // namespace

void run_toric(Suite& s) {
  const DelzantPolygon cp2 = DelzantPolygon::cp2();
  const DelzantPolygon sq = DelzantPolygon::square();
  const Mat4 id = Mat4::Identity();

  s.guarded("centre_hessian", "G_ij and G^ij of CP2 at the centre", 1e-14, [&] {
    const GuilleminData d = guillemin(cp2, {1.0 / 3, 1.0 / 3});
    const Mat2 H{{3.0, 1.5}, {1.5, 3.0}};
    const Mat2 Hi{{4.0 / 9, -2.0 / 9}, {-2.0 / 9, 4.0 / 9}};
    return std::max(max_abs(d.hess - H), max_abs(d.hess_inv - Hi));
  });

  double inv = 0, closed = 0, J2 = 0, herm = 0, compat = 0, posdef = -INFINITY, zmod = 0, rt = 0;
  double norm = 0, Qc = 0, Q11 = 0, jacobi = 0, imsig = 0, sigz = 0, chart = 0, anti = 0;
  for (int i = 0; i < 20; ++i) {
    const MomentPoint y = random_cp2_point(s);
    const Vec2 theta(s.uniform(-3.1, 3.1), s.uniform(-3.1, 3.1));
    for (const DelzantPolygon* poly : {&cp2, &sq}) {
      const MomentPoint p = poly == &cp2 ? y : MomentPoint{s.uniform(0.02, 0.98), s.uniform(0.02, 0.98)};
      const GuilleminData d = guillemin(*poly, p);
      inv = std::max(inv, max_abs(d.hess * d.hess_inv - Mat2::Identity()));
      const Mat4 J = complex_structure_ytheta(*poly, p);
      const Mat4 g = metric_ytheta(*poly, p);
      J2 = std::max(J2, max_abs(J * J + id));
      herm = std::max(herm, max_abs(J.transpose() * g * J - g));
      compat = std::max(compat, max_abs(symplectic_ytheta() * J - g));
      posdef = std::max(posdef, -Eigen::SelfAdjointEigenSolver<Mat4>(g).eigenvalues().minCoeff());
    }
    const double y3 = y.y3(), c3 = y.y1 * y.y2 * y3;
    const GuilleminData d = guillemin(cp2, y);
    const Mat2 Gi{{2 * y.y1 * (1 - y.y1), -2 * y.y1 * y.y2}, {-2 * y.y1 * y.y2, 2 * y.y2 * (1 - y.y2)}};
    closed = std::max(closed, max_abs(d.hess_inv - Gi));
    const auto [z1, z2] = cp2_coords(y, theta);
    zmod = std::max({zmod, std::abs(std::norm(z1) * y3 - y.y1), std::abs(std::norm(z2) * y3 - y.y2)});
    const MomentPoint back = cp2_moment_from_coords(z1, z2);
    rt = std::max({rt, std::abs(back.y1 - y.y1), std::abs(back.y2 - y.y2)});
    norm = std::max({norm, std::abs(poisson_norm(y) - 2 * c3),
                     std::abs(poisson_norm_general(cp2, y) - 2 * c3)});

    const Mat4 Q = hitchin_Q_ytheta(y);
    const Mat4 J = complex_structure_ytheta(cp2, y);
    Qc = std::max({Qc, std::abs(Q(2, 3) - 4 * c3), std::abs(Q(0, 1) + 1.0), max_abs(Q + Q.transpose())});
    Q11 = std::max(Q11, max_abs(0.5 * (Q + J * Q * J.transpose())));
    const CMat4 sigma = holomorphic_poisson_ytheta(cp2, y);
    imsig = std::max(imsig, max_abs(4.0 * sigma.imag() - Q));

    // Jacobi identity sum_cyc Q^{il} d_l Q^{jk} with y-derivatives by differences.
    Mat4 dQ[4] = {Mat4::Zero(), Mat4::Zero(), Mat4::Zero(), Mat4::Zero()};
    const double h = 1e-5;
    dQ[2] = (hitchin_Q_ytheta({y.y1 + h, y.y2}) - hitchin_Q_ytheta({y.y1 - h, y.y2})) / (2 * h);
    dQ[3] = (hitchin_Q_ytheta({y.y1, y.y2 + h}) - hitchin_Q_ytheta({y.y1, y.y2 - h})) / (2 * h);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          double v = 0;
          for (int l = 0; l < 4; ++l)
            v += Q(a, l) * dQ[l](b, c) + Q(b, l) * dQ[l](c, a) + Q(c, l) * dQ[l](a, b);
          jacobi = std::max(jacobi, std::abs(v));
        }

    // sigma in each corner chart: i z1 z2 d1 ^ d2, no antiholomorphic part
    const auto corners = complex_coords(cp2, y, theta);
    for (int a = 0; a < 3; ++a) {
      const auto Jz = corner_jacobian(cp2, a, y, theta);
      const Eigen::Matrix2cd push = Jz * sigma * Jz.transpose();
      const Complex expect = Complex(0.0, 1.0) * corners[a].z1 * corners[a].z2;
      sigz = std::max({sigz, std::abs(push(0, 1) - expect), std::abs(push(1, 0) + expect),
                       std::abs(push(0, 0)), std::abs(push(1, 1))});
      const Eigen::Matrix2cd mixed = Jz.conjugate() * sigma * Jz.conjugate().transpose();
      anti = std::max(anti, mixed.cwiseAbs().maxCoeff());
      for (int b = 0; b < 3; ++b) {
        const IMat2 A = transition_matrix(cp2.normals[a], cp2.normals[(a + 1) % 3], cp2.normals[b],
                                          cp2.normals[(b + 1) % 3]);
        const auto [w1, w2] = monomial_map(A, corners[a].z1, corners[a].z2);
        chart = std::max({chart, std::abs(w1 - corners[b].z1) / std::max(1.0, std::abs(w1)),
                          std::abs(w2 - corners[b].z2) / std::max(1.0, std::abs(w2)),
                          std::abs(A.cast<double>().determinant() - 1.0)});
      }
    }
  }
  s.check("hessian_inverse", "G_ij G^jk = delta (triangle and square)", inv, 1e-12);
  s.check("inverse_closed_form", "G^ij = 2 [[y1(1-y1), -y1 y2], [-y1 y2, y2(1-y2)]]", closed, 1e-12);
  s.check("J_squared", "J^2 = -1 (triangle and square)", J2, 1e-12);
  s.check("J_hermitian", "J^T g J = g", herm, 1e-12);
  s.check("kahler_compatibility", "omega(., J .) = g with omega = sum dy^i ^ dtheta_i", compat, 1e-12);
  s.check("metric_positive", "metric positive definite (negated min eigenvalue)", posdef, 0.0);
  s.check("coordinate_moduli", "|z^1|^2 y3 = y1 and |z^2|^2 y3 = y2", zmod, 1e-12);
  s.check("coordinate_round_trip", "y recovered from |z^1|, |z^2|", rt, 1e-12);
  s.check("poisson_norm", "||sigma||^2 = 2 y1 y2 y3 = det(G_ij)^{-1} / 2", norm, 1e-12);
  s.check("Q_components", "Q = 4 c3 d_y1 ^ d_y2 - d_theta1 ^ d_theta2", Qc, 1e-14);
  s.check("Q_type_20_02", "(1,1) part of Q under J vanishes", Q11, 1e-12);
  s.check("Q_im_sigma", "Q = 4 Im sigma", imsig, 1e-12);
  s.check("Q_jacobi", "Jacobi identity of Q (differences)", jacobi, 1e-8);
  s.check("sigma_corner_charts", "sigma = i z1 z2 d_z1 ^ d_z2 in all three corner charts", sigz, 1e-11);
  s.check("sigma_holomorphic", "sigma has no antiholomorphic part in any corner chart", anti, 1e-11);
  s.check("chart_transition", "monomial transition between corner charts, det A = 1", chart, 1e-10);

  s.guarded("centre_values", "z = (1, 1) and ||sigma||^2 = 2/27 at the centre", 1e-15, [] {
    const auto [z1, z2] = cp2_coords({1.0 / 3, 1.0 / 3}, Vec2::Zero());
    return std::abs(z1 - 1.0) + std::abs(z2 - 1.0) + std::abs(poisson_norm({1.0 / 3, 1.0 / 3}) - 2.0 / 27);
  });
  s.guarded("identity_transition", "identical corners give the identity transition", 0.5, [&] {
    return (transition_matrix(cp2.normals[0], cp2.normals[1], cp2.normals[0], cp2.normals[1]) ==
            IMat2::Identity()) ? 0.0 : 1.0;
  });
  s.guarded("errors", "BoundaryError on a face, InvalidCornerError on a non-smooth corner", 0.5, [&] {
    int hits = 0;
    try { guillemin(cp2, {0.0, 0.5}); } catch (const BoundaryError&) { ++hits; }
    try { transition_matrix(IVec2(1, 0), IVec2(1, 2), IVec2(1, 0), IVec2(0, 1)); } catch (const InvalidCornerError&) { ++hits; }
    return hits == 2 ? 0.0 : 1.0;
  });
}

}  // namespace gkcp2::verify
