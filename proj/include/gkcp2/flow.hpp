#pragma once

// Closed-form Hitchin flow on the CP2 moment triangle.
//
// Polar chart (c3, s): c3 = y1 y2 y3 labels the contour, s is the angle with
// complex time t = omega2 + s omega1 / pi.  Along each contour
//
//   y^k(s) = c3 / (1/12 - wp(omega2 + omega1 (s + 2 pi k / 3) / pi)),  k = 1, 2, 3,
//
// and the flow is d/dt y^1 = y^1 (y^2 - y^3) plus cyclic permutations, moving
// clockwise around the contour.

#include <array>

#include "gkcp2/elliptic.hpp"

namespace gkcp2::flow {

using elliptic::LatticeData;

struct PolarPoint {
  double c3 = 0.0;
  double s = 0.0;
};

struct TriplePoint {
  double y1 = 0.0;
  double y2 = 0.0;
  double y3 = 0.0;

  std::array<double, 3> arr() const { return {y1, y2, y3}; }
  double sum() const { return y1 + y2 + y3; }
  double product() const { return y1 * y2 * y3; }
};

/// Reduce s to [0, 2 pi).
double reduce_s(double s);

TriplePoint y_of_polar(const PolarPoint& p, const elliptic::GuardBand& guard = {});
TriplePoint y_of_polar(const LatticeData& lat, double s);

/// Same values through the Weierstrass zeta representation.
TriplePoint y_via_zeta(const PolarPoint& p, const elliptic::GuardBand& guard = {});
TriplePoint y_via_zeta(const LatticeData& lat, double s);

/// d y^i / d c3 at fixed s.
std::array<double, 3> dy_dc3(const PolarPoint& p, const elliptic::GuardBand& guard = {});
std::array<double, 3> dy_dc3(const LatticeData& lat, double s);

/// d y^i / d s = (omega1 / pi) y^i (y^{i+1} - y^{i+2}).
std::array<double, 3> dy_ds(const LatticeData& lat, double s);

/// Chart inversion: c3 from the closed form, s by a 64-point scan plus Newton.
PolarPoint polar_of_y(double y1, double y2, const elliptic::GuardBand& guard = {});

/// Flow for time dt: (c3, s) -> (c3, s + pi dt / omega1(c3)), s reduced.
PolarPoint flow_map(const PolarPoint& p, double dt, const elliptic::GuardBand& guard = {});

struct OdeOptions {
  double abs_tol = 1e-14;
  double rel_tol = 1e-14;
  double initial_step = 1e-3;
  std::size_t max_steps = 2000000;
};

/// Adaptive Runge-Kutta-Fehlberg 7(8) integration of the flow equations.
TriplePoint ode_oracle(const TriplePoint& y0, double dt, const OdeOptions& opt = {});

}  // namespace gkcp2::flow
