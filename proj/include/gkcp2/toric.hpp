#pragma once

// Symplectic (action-angle) description of toric surfaces.
//
// All 4x4 samples use the coordinate order (theta1, theta2, y1, y2).
// A (1,1) tensor T is stored as m(a, b) = T^a_b, a bivector as m(a, b) = P^{ab}
// and a 2-form or metric as m(a, b) = w_{ab}.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gkcp2/errors.hpp"

namespace gkcp2::toric {

using Complex = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using CMat4 = Eigen::Matrix4cd;
using IVec2 = Eigen::Vector2i;
using IMat2 = Eigen::Matrix2i;

inline constexpr double kFaceTolerance = 1e-9;

/// Polygon {y : <y, v^a> + lambda^a >= 0}, normals listed counter-clockwise.
struct DelzantPolygon {
  std::vector<IVec2> normals;
  std::vector<double> offsets;

  static DelzantPolygon cp2();
  /// Unit square of CP1 x CP1.
  static DelzantPolygon square();

  bool is_cp2() const;
  /// Throws InvalidCornerError unless every pair of consecutive normals has cross product 1.
  void validate() const;
};

struct MomentPoint {
  double y1 = 0.0;
  double y2 = 0.0;
  double y3() const { return 1.0 - y1 - y2; }
  Vec2 vec() const { return {y1, y2}; }
};

struct GuilleminData {
  double G = 0.0;
  Vec2 grad = Vec2::Zero();
  Mat2 hess = Mat2::Zero();
  Mat2 hess_inv = Mat2::Zero();
};

int cross(const IVec2& a, const IVec2& b);

/// Face values <v^a, y> + lambda^a; throws BoundaryError if any is <= kFaceTolerance.
std::vector<double> face_values(const DelzantPolygon& poly, const MomentPoint& y);

GuilleminData guillemin(const DelzantPolygon& poly, const MomentPoint& y);

Mat4 complex_structure_ytheta(const DelzantPolygon& poly, const MomentPoint& y);
Mat4 metric_ytheta(const DelzantPolygon& poly, const MomentPoint& y);
/// omega = sum dy^i ^ dtheta_i
Mat4 symplectic_ytheta();

/// Complex coordinates of the C^2 patch at one corner of the polygon.
struct CornerCoords {
  int corner = 0;  // corner between face `corner` and face `corner + 1`
  Complex z1;
  Complex z2;
};

/// Coordinates in every corner chart, z_a = prod_i xi_i^{(U^{-1})_{ai}} with
/// xi_i = exp(i theta_i + G_i) and U = [u^1 u^2] the corner normals.
std::vector<CornerCoords> complex_coords(const DelzantPolygon& poly, const MomentPoint& y,
                                         const Vec2& theta);

/// Standard inhomogeneous coordinates of CP2 (the chart at the origin).
std::pair<Complex, Complex> cp2_coords(const MomentPoint& y, const Vec2& theta);

/// Moment point from the CP2 inhomogeneous coordinates.
MomentPoint cp2_moment_from_coords(Complex z1, Complex z2);

/// Transition matrix between the charts at corners (u^1, u^2) and (v^1, v^2):
/// tilde z_a = prod_b z_b^{A_ab}.
IMat2 transition_matrix(const IVec2& u1, const IVec2& u2, const IVec2& v1, const IVec2& v2);

/// Apply the monomial map of a transition matrix.
std::pair<Complex, Complex> monomial_map(const IMat2& A, Complex z1, Complex z2);

/// Toric invariant holomorphic Poisson tensor in action-angle coordinates
/// (complex bivector, order theta1, theta2, y1, y2).
CMat4 holomorphic_poisson_ytheta(const DelzantPolygon& poly, const MomentPoint& y);

/// ||sigma||^2 = 1/(2 det G_ij) for a general polygon.
double poisson_norm_general(const DelzantPolygon& poly, const MomentPoint& y);

/// ||sigma||^2 on CP2, 2 y1 y2 y3.
double poisson_norm(const MomentPoint& y);

/// Hitchin Poisson tensor on CP2: 4 y1 y2 y3 d_y1 ^ d_y2 - d_theta1 ^ d_theta2.
Mat4 hitchin_Q_ytheta(const MomentPoint& y);

}  // namespace gkcp2::toric
