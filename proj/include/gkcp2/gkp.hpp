#pragma once

// Generalised Kahler potential along the flow on CP2:
//
//   K = (dt/4) log c3 + (3/8) int_0^dt sum_i y^i_t log(y^i_t / y^i_0) dt,
//
// normalised by K(dt = 0) = 0.

#include <complex>
#include <vector>

#include "gkcp2/flow.hpp"

namespace gkcp2::gkp {

using flow::PolarPoint;

struct GkpValue {
  PolarPoint point;
  double dt = 0.0;
  double K = 0.0;
  double fubini_study_part = 0.0;
  double correction_part = 0.0;
  int quad_order_used = 0;
};

/// Gauss-Legendre in the flow time with order doubling from quad_order (>= 8).
GkpValue potential(const PolarPoint& p, double dt, int quad_order = 16);

/// The same correction evaluated in u = pi t / omega1.
double correction_u_form(const PolarPoint& p, double dt, int quad_order = 16);

/// Trapezoid oracle for the correction with n panels.
double correction_trapezoid(const PolarPoint& p, double dt, int panels = 100000);

/// Integrand sum_i y^i_t log(y^i_t / y^i_0) at flow time t.
double integrand(const elliptic::LatticeData& lat, double s, double t);

/// Local holomorphic coordinates Q^1, Q^2 on the Lagrangian L_t.
std::pair<std::complex<double>, std::complex<double>> local_Q_coords(const PolarPoint& p, double dt,
                                                                     double theta1, double theta2);

struct FaceSample {
  double c3 = 0.0;
  double correction = 0.0;
  double fubini_study = 0.0;
  double min_ratio = 0.0;  // min over i, t of y^i_t / y^i_0
  double max_ratio = 0.0;
};

/// Evaluates the sequence at fixed (s, dt); returns true when the correction
/// stays below `bound` and every ratio y_t / y_0 stays in (1/bound, bound).
bool correction_regularity_check(const std::vector<double>& c3_sequence, double s, double dt,
                                 std::vector<FaceSample>* samples = nullptr, double bound = 1e3);

}  // namespace gkcp2::gkp
