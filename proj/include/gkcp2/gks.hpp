#pragma once

// Generalised Kahler structure on CP2 in the chart (theta1, theta2, c3, s).
//
// Matrix conventions for a 4x4 sample m:
//   complex structure I:  m(a, b) = I^a_b, acting on vectors by m * v
//   bivector Q:           m(a, b) = Q^{ab}
//   2-form F, metric g:   m(a, b) = F_{ab}
// so that QF, I^T F (the dual action I^*) and F I are plain matrix products.

#include <string>
#include <utility>

#include <Eigen/Dense>

#include "gkcp2/flow.hpp"

namespace gkcp2::gks {

using Mat4 = Eigen::Matrix4d;
using flow::PolarPoint;
using elliptic::LatticeData;

enum Coord : int { kTheta1 = 0, kTheta2 = 1, kC3 = 2, kS = 3 };

enum class FieldKind { I_minus, I_plus, Q, F, g, sigma_plus_re, sigma_plus_im };

std::string to_string(FieldKind k);
/// Throws std::invalid_argument for unknown names.
FieldKind field_kind_from_string(const std::string& name);

struct FieldSample {
  PolarPoint point;
  FieldKind kind = FieldKind::I_minus;
  Mat4 m = Mat4::Zero();
  double dt = 0.0;
};

// Raw matrices from a precomputed lattice (no guard-band check).
Mat4 J_matrix(const LatticeData& lat, double s);
Mat4 I_plus_matrix(const LatticeData& lat, double s, double dt);
Mat4 Q_matrix(const LatticeData& lat);
Mat4 F_matrix(const LatticeData& lat, double s, double dt);
/// g = I_-^T F - F I_-, positive for small dt > 0.
Mat4 metric_matrix(const LatticeData& lat, double s, double dt);

FieldSample I_minus(const PolarPoint& p);
FieldSample Q_polar(const PolarPoint& p);
FieldSample I_plus(const PolarPoint& p, double dt);
FieldSample F_two_form(const PolarPoint& p, double dt);
FieldSample metric(const PolarPoint& p, double dt);
FieldSample sample(FieldKind kind, const PolarPoint& p, double dt);

/// Flow-integrated coordinates Y^1, Y^2 (sigma-quotients) and their partials.
struct YData {
  double Y1 = 0.0;
  double Y2 = 0.0;
  double dY1_dc3 = 0.0;
  double dY2_dc3 = 0.0;
  double dY1_ds = 0.0;
  double dY2_ds = 0.0;
};

YData y_integrals(const LatticeData& lat, double s, double dt);

/// sigma_{+/-} = (I Q + i Q) / 4 split into real and imaginary parts.
std::pair<FieldSample, FieldSample> sigma_pm(const PolarPoint& p, double dt, bool plus = true);

/// Max |component| of the (0,2) part P sigma P^T, P = (1 + i I)/2.
double sigma_02_residual(const Mat4& I, const Mat4& Q);

/// Max component of the Nijenhuis tensor of I_minus or I_plus by 4th-order
/// central differences in (c3, s).  Throws StencilError if the c3 stencil
/// leaves the guard band.
double nijenhuis(FieldKind kind, const PolarPoint& p, double dt,
                 const elliptic::GuardBand& guard = {});

struct GksReport {
  double residual_GKS_I = 0.0;
  double residual_GKS_II = 0.0;
  double residual_I2 = 0.0;
  double residual_hermitian_plus = 0.0;
  double residual_hermitian_minus = 0.0;
  double residual_symmetry = 0.0;
  double residual_block = 0.0;
  double min_metric_eigenvalue = 0.0;
  double nijenhuis_max = 0.0;
};

GksReport gks_report(const PolarPoint& p, double dt, bool with_nijenhuis = false);

struct GridSpec {
  double c3_lo = 0.005;
  double c3_hi = 0.032;
  int n_c3 = 20;
  int n_s = 20;
  int n_theta = 4;
};

struct PositivityReport {
  double min_eigenvalue = 0.0;
  PolarPoint argmin;
  int samples = 0;
};

/// Minimum over the grid of the smallest eigenvalue of g.  The fields are
/// theta-independent, so each theta sample reuses the (c3, s) value.
PositivityReport positivity_scan(double dt, const GridSpec& grid);

/// d(I_-^* dh), h = -log(c3)/4, by finite differences of the 1-form I_-^T dh.
Mat4 curvature_form_fd(const PolarPoint& p, double h_c3 = 0.0, double h_s = 1e-4);

}  // namespace gkcp2::gks
