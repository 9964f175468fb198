#pragma once

// Slow reference computations used only by the verification suites.

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "gkcp2/elliptic.hpp"

namespace gkcp2::oracle {

using elliptic::Complex;
using Mat4 = Eigen::Matrix4d;

/// wp by the direct lattice sum over square shells |m|,|n| <= N, with the
/// z^2 and z^4 tail terms restored from g2 = 60 G4 and g3 = 140 G6.
Complex lattice_sum_wp(Complex z, const elliptic::LatticeData& lat, int N = 60);

/// omega1 = int_{e1}^inf dt / sqrt(4t^3 - g2 t - g3) with e1 found by bisection.
double period_integral_omega1(double g2, double g3);

/// Polynomial (Neville) extrapolation of samples (x_k, f_k) to x = 0.
double extrapolate_to_zero(const std::vector<double>& x, const std::vector<double>& f);

/// 4th-order central difference.
double diff4(const std::function<double(double)>& f, double x, double h);

/// d(theta, c3, s) / d(theta, y1, y2) at the moment point of (c3, s), with
/// ds/dy from differencing the chart inversion.
Mat4 chart_jacobian(double c3, double s);

/// The (theta, y) complex structure of CP2 transported to (theta, c3, s).
Mat4 I_minus_chain_rule(double c3, double s);

/// Pullback of I_- through the time-dt flow, with the flow Jacobian by
/// differencing omega1(c3).
Mat4 I_plus_pullback(double c3, double s, double dt);

/// The (theta, y) Poisson bivector transported to (theta, c3, s).
Mat4 Q_transport(double c3, double s);

/// 2 int_0^{1/27} omega1 dc3 by tanh-sinh quadrature.
double area_integral();

}  // namespace gkcp2::oracle
