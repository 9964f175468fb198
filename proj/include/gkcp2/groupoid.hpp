#pragma once

// Holomorphic symplectic groupoid T*M integrating sigma = i z1 z2 d_z1 ^ d_z2,
// in one corner chart with base coordinates (z1, z2) and fibre coordinates
// (xi1, xi2).  Matrices use the basis order (z1, z2, xi1, xi2).

#include <array>
#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "gkcp2/errors.hpp"

namespace gkcp2::groupoid {

using Complex = std::complex<double>;
using CMat4 = Eigen::Matrix4cd;
using CMat2 = Eigen::Matrix2cd;
using CMat24 = Eigen::Matrix<Complex, 2, 4>;
using CVec4 = Eigen::Vector4cd;
using BasePoint = std::array<Complex, 2>;

inline constexpr double kComposeTolerance = 1e-9;

struct GroupoidPoint {
  Complex z1, z2, xi1, xi2;

  CVec4 vec() const { return {z1, z2, xi1, xi2}; }
  static GroupoidPoint from_vec(const CVec4& v) { return {v(0), v(1), v(2), v(3)}; }
};

struct DarbouxPoint {
  Complex q1, q2, p1, p2;
};

/// Holomorphic symplectic form Omega_0 as an antisymmetric matrix.
CMat4 omega0(const GroupoidPoint& g);
/// Bivector Pi = Omega_0^{-1} from its closed form.
CMat4 pi_bivector(const GroupoidPoint& g);

BasePoint source(const GroupoidPoint& g);
BasePoint target(const GroupoidPoint& g);
GroupoidPoint unit(const BasePoint& z);

/// h o g; requires s(h) = t(g) to kComposeTolerance, else ComposabilityError.
GroupoidPoint compose(const GroupoidPoint& h, const GroupoidPoint& g);

DarbouxPoint darboux(const GroupoidPoint& g);
BasePoint darboux_source(const DarbouxPoint& d);
BasePoint darboux_target(const DarbouxPoint& d);

/// sigma = i z1 z2 d_z1 ^ d_z2 as a 2x2 matrix.
CMat2 sigma_z(const BasePoint& z);

/// Holomorphic Jacobians (2x4) of the source and target maps by 4th-order
/// central differences; throws JacobianError on non-finite output.
CMat24 source_jacobian(const GroupoidPoint& g, double h = 1e-3);
CMat24 target_jacobian(const GroupoidPoint& g, double h = 1e-3);

struct PushforwardResiduals {
  double source_poisson = 0.0;   // |s_* Pi + sigma(s(g))|
  double target_poisson = 0.0;   // |t_* Pi - sigma(t(g))|
  double bracket_orthogonality = 0.0;  // |t_* Pi s_*^T|
  double kernel_orthogonality = 0.0;   // |Omega_0(ker s_*, ker t_*)|
};

PushforwardResiduals target_pushforward_check(const GroupoidPoint& g);

/// Example model on C^2 with coordinates (x, y, u, v); det = 1 identically.
CMat4 toy_omega(Complex x, Complex y, Complex u, Complex v);

/// Transport a point to another corner chart with transition matrix A:
/// tilde z_a = prod_b z_b^{A_ab}, and the products z^a xi_a transform by A^{-T}.
GroupoidPoint change_chart(const GroupoidPoint& g, const Eigen::Matrix2i& A);

}  // namespace gkcp2::groupoid
