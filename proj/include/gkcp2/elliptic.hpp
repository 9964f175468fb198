#pragma once

// Weierstrass elliptic functions for the one-parameter family of rectangular
// lattices with invariants
//
//   g2 = 1/12 - 2 c3,   g3 = c3/6 - 1/216 - c3^2,   0 < c3 < 1/27.
//
// Conventions: omega1 is the real positive half-period, omega2 = i*|omega2|
// is purely imaginary, e1 = wp(omega1) > e3 = wp(omega1 + omega2) >
// e2 = wp(omega2).  Imaginary quantities (omega2, eta2, tilde eta2) are
// stored through their imaginary parts.
//
// Evaluation reduces the argument to the period cell centred at the origin
// and uses Jacobi theta q-series with the real nome q = exp(i pi omega2/omega1).

#include <complex>
#include <utility>

#include "gkcp2/errors.hpp"

namespace gkcp2::elliptic {

using Complex = std::complex<double>;

inline constexpr double kOneTwelfth = 1.0 / 12.0;
inline constexpr double kC3Max = 1.0 / 27.0;

/// Admissible c3 range. The lattice degenerates at both ends of (0, 1/27).
struct GuardBand {
  double lo = 1e-6;
  double hi = kC3Max - 1e-6;
};

struct CubicInvariants {
  double c3 = 0.0;
  double g2 = 0.0;
  double g3 = 0.0;
  double discriminant = 0.0;  // g2^3 - 27 g3^2 = c3^3 (1 - 27 c3)
};

struct LatticeData {
  double c3 = 0.0;
  double omega1 = 0.0;
  double omega2_im = 0.0;
  double eta1 = 0.0;
  double eta2_im = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  double tilde_eta1 = 0.0;
  double tilde_eta2_im = 0.0;
  double j_invariant = 0.0;

  double g2 = 0.0;
  double g3 = 0.0;
  double discriminant = 0.0;

  // Root gaps computed without cancellation; they control the periods.
  double e1_minus_e2 = 0.0;
  double e1_minus_e3 = 0.0;
  double e3_minus_e2 = 0.0;
  double twelfth_minus_e1 = 0.0;  // 1/12 - e1 > 0

  double nome = 0.0;  // q = exp(-pi |omega2| / omega1)
  double theta1_prime_0 = 0.0;
  double theta2_0 = 0.0;
  double theta3_0 = 0.0;
  double theta4_0 = 0.0;

  Complex omega2() const { return {0.0, omega2_im}; }
  Complex eta2() const { return {0.0, eta2_im}; }
  Complex tilde_eta2() const { return {0.0, tilde_eta2_im}; }
  /// The tertiary point 2 omega1 / 3 where wp = 1/12.
  double tertiary() const { return 2.0 * omega1 / 3.0; }
};

/// Throws DomainError unless guard.lo <= c3 <= guard.hi (and 0 < c3 < 1/27).
void check_c3(double c3, const GuardBand& guard = {});

CubicInvariants invariants_from_c3(double c3, const GuardBand& guard = {});

LatticeData lattice_from_invariants(const CubicInvariants& inv);

inline LatticeData lattice_from_c3(double c3, const GuardBand& guard = {}) {
  return lattice_from_invariants(invariants_from_c3(c3, guard));
}

/// Real half-periods (omega1, |omega2|) only.  `upper_gap` is 1/27 - c3,
/// passed separately so that both ends of the interval keep full relative
/// precision.  No guard band: any 0 < c3 < 1/27 is accepted.
std::pair<double, double> real_half_periods(double c3, double upper_gap);

struct ThetaValues {
  Complex theta1;
  Complex theta1_prime;
  Complex theta2;
  Complex theta3;
  Complex theta4;
};

/// Jacobi theta functions theta_k(v | q) for real 0 < q < 1.
ThetaValues jacobi_theta(Complex v, double q);

/// wp, wp' and zeta from one set of theta sums.
struct WeierstrassValues {
  Complex wp;
  Complex wp_prime;
  Complex zeta;
  Complex wp_minus_e1;  // accurate even when wp is close to e1
};

WeierstrassValues evaluate(Complex z, const LatticeData& lat);

Complex wp(Complex z, const LatticeData& lat);
Complex wp_prime(Complex z, const LatticeData& lat);
Complex zeta_w(Complex z, const LatticeData& lat);
Complex sigma_w(Complex z, const LatticeData& lat);
/// Continuous in z away from the zeros of sigma; the branch of the
/// imaginary part is fixed by the quasi-periodicity bookkeeping.
Complex log_sigma_w(Complex z, const LatticeData& lat);

/// Distance from z to the nearest point of the pole lattice 2*Omega.
double pole_distance(Complex z, const LatticeData& lat);

/// Values at the sixth/third periods, tau_f = 2 omega1 / 3.
struct TertiaryValues {
  double wp_tf_half;
  double wp_w2_plus_tf;
  double wp_prime_tf_half;
  double wp_prime_w2_plus_tf;
};

TertiaryValues tertiary_values(const LatticeData& lat);

/// varsigma(s) = zeta(omega2 + s omega1/pi) - eta2 - s eta1/pi, real and
/// 2 pi periodic for real s.
double varsigma(double s, const LatticeData& lat);

// c3-derivatives at fixed complex argument z.
Complex d_c3_wp(Complex z, const LatticeData& lat);
Complex d_c3_zeta(Complex z, const LatticeData& lat);
Complex d_c3_log_sigma(Complex z, const LatticeData& lat);

struct PeriodDerivatives {
  double d_omega1;
  double d_omega2_im;
  double d_eta1;
  double d_eta2_im;
  double d_tilde_eta1;
  double d_tilde_eta2_im;
};

PeriodDerivatives d_c3_periods(const LatticeData& lat);

}  // namespace gkcp2::elliptic
