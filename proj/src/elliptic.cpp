#include "gkcp2/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace gkcp2::elliptic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleThreshold = 1e-8;

double agm(double a, double b) {
  for (int it = 0; it < 64; ++it) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    // converged once the pair stops moving (quadratic convergence)
    if (std::abs(a - b) <= 1e-9 * a) return 0.5 * (an + bn);
    a = an;
    b = bn;
  }
  throw ConvergenceError("AGM failed to converge");
}

// sum_{n>=1} n q^{2n} / (1 - q^{2n}), the E2 Lambert series.
double lambert_e2(double q) {
  const double q2 = q * q;
  double sum = 0.0;
  double qn = 1.0;
  for (int n = 1; n < 200000; ++n) {
    qn *= q2;
    const double term = n * qn / (1.0 - qn);
    sum += term;
    if (term < 1e-18 * std::max(1.0, sum)) return sum;
  }
  throw ConvergenceError("quasi-period series did not converge");
}

// Roots of y(1-y)^2 = 4 c3 in (0,1/3), (1/3,1), (1,4/3) and their gaps.
// `gap` is 1/27 - c3 supplied independently.
struct YRoots {
  double ya, yb, yc;
  double yc_minus_yb, yb_minus_ya;
};

YRoots y_roots(double c3, double gap) {
  const double a = std::sqrt(54.0 * c3);
  const double b = std::sqrt(54.0 * gap);
  const double theta = 2.0 * std::atan2(b, a);      // arccos(54 c3 - 1)
  const double alpha = 2.0 * std::atan2(a, b) / 3.0;  // (pi - theta)/3
  YRoots r{};
  const double cc = std::cos(theta / 6.0);
  const double cb = std::cos((theta - 2.0 * kPi) / 6.0);
  const double sa = std::sin(alpha / 2.0);
  r.yc = 4.0 / 3.0 * cc * cc;
  r.yb = 4.0 / 3.0 * cb * cb;
  r.ya = 4.0 / 3.0 * sa * sa;
  r.yc_minus_yb = 2.0 / std::sqrt(3.0) * std::sin(alpha);
  r.yb_minus_ya = 2.0 / std::sqrt(3.0) * std::sin(theta / 3.0);
  return r;
}

struct RootGaps {
  double e12, e13, e32;
};

RootGaps root_gaps(double c3, const YRoots& r) {
  RootGaps g{};
  g.e13 = c3 * r.yc_minus_yb / (r.yc * r.yb);
  g.e32 = c3 * r.yb_minus_ya / (r.yb * r.ya);
  g.e12 = g.e13 + g.e32;
  return g;
}

struct Reduced {
  Complex z0;
  double m;
  double n;
};

Reduced reduce(Complex z, const LatticeData& lat) {
  const double m = std::round(z.real() / (2.0 * lat.omega1));
  const double n = std::round(z.imag() / (2.0 * lat.omega2_im));
  return {z - Complex(2.0 * m * lat.omega1, 2.0 * n * lat.omega2_im), m, n};
}

void require_off_pole(const Reduced& r, const LatticeData& lat) {
  if (std::abs(r.z0) < kPoleThreshold * lat.omega1) {
    std::ostringstream os;
    os << "argument within " << std::abs(r.z0) << " of the pole lattice";
    throw PoleError(os.str());
  }
}

}  // namespace

void check_c3(double c3, const GuardBand& guard) {
  if (!(c3 > 0.0 && c3 < kC3Max && c3 >= guard.lo && c3 <= guard.hi)) {
    std::ostringstream os;
    os << "c3 = " << c3 << " outside the admissible band [" << guard.lo << ", " << guard.hi
       << "]";
    throw DomainError(os.str());
  }
}

CubicInvariants invariants_from_c3(double c3, const GuardBand& guard) {
  check_c3(c3, guard);
  CubicInvariants inv;
  inv.c3 = c3;
  inv.g2 = kOneTwelfth - 2.0 * c3;
  inv.g3 = c3 / 6.0 - 1.0 / 216.0 - c3 * c3;
  inv.discriminant = c3 * c3 * c3 * (1.0 - 27.0 * c3);
  return inv;
}

std::pair<double, double> real_half_periods(double c3, double upper_gap) {
  if (!(c3 > 0.0 && upper_gap > 0.0)) throw DomainError("c3 outside (0, 1/27)");
  const YRoots r = y_roots(c3, upper_gap);
  const RootGaps g = root_gaps(c3, r);
  const double w1 = kPi / (2.0 * agm(std::sqrt(g.e12), std::sqrt(g.e13)));
  const double w2 = kPi / (2.0 * agm(std::sqrt(g.e12), std::sqrt(g.e32)));
  return {w1, w2};
}

ThetaValues jacobi_theta(Complex v, double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("nome outside (0,1)");
  const double lq = std::log(q);
  const double im = std::abs(v.imag());
  ThetaValues t{};
  t.theta3 = 1.0;
  t.theta4 = 1.0;
  double scale = 0.0;
  for (int n = 0; n < 400; ++n) {
    const double k = 2.0 * n + 1.0;
    const double qh = std::exp(lq * (n + 0.5) * (n + 0.5));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const Complex s = std::sin(k * v);
    const Complex c = std::cos(k * v);
    t.theta1 += 2.0 * sign * qh * s;
    t.theta1_prime += 2.0 * sign * k * qh * c;
    t.theta2 += 2.0 * qh * c;
    const double m = n + 1.0;
    const double qi = std::exp(lq * m * m);
    const Complex c2 = std::cos(2.0 * m * v);
    t.theta3 += 2.0 * qi * c2;
    t.theta4 += 2.0 * ((n % 2 == 0) ? -1.0 : 1.0) * qi * c2;
    // Envelope of the remaining terms.
    const double env = k * std::exp(lq * (n + 0.5) * (n + 0.5) + k * im);
    scale = std::max({scale, std::abs(t.theta1), std::abs(t.theta2), std::abs(t.theta3)});
    if (n >= 1 && env < 1e-24 * scale) return t;
    if (env < 1e-300) return t;
  }
  throw ConvergenceError("theta series did not converge");
}

LatticeData lattice_from_invariants(const CubicInvariants& inv) {
  const double c3 = inv.c3;
  if (!(c3 > 0.0 && c3 < kC3Max)) throw DomainError("c3 outside (0, 1/27)");
  LatticeData lat;
  lat.c3 = c3;
  lat.g2 = inv.g2;
  lat.g3 = inv.g3;
  lat.discriminant = inv.discriminant;

  const double gap = (1.0 - 27.0 * c3) / 27.0;
  const YRoots r = y_roots(c3, gap);
  const RootGaps g = root_gaps(c3, r);
  lat.twelfth_minus_e1 = c3 / r.yc;
  lat.e1 = kOneTwelfth - c3 / r.yc;
  lat.e3 = kOneTwelfth - c3 / r.yb;
  lat.e2 = kOneTwelfth - c3 / r.ya;
  lat.e1_minus_e2 = g.e12;
  lat.e1_minus_e3 = g.e13;
  lat.e3_minus_e2 = g.e32;

  lat.omega1 = kPi / (2.0 * agm(std::sqrt(g.e12), std::sqrt(g.e13)));
  lat.omega2_im = kPi / (2.0 * agm(std::sqrt(g.e12), std::sqrt(g.e32)));
  if (!(std::isfinite(lat.omega1) && std::isfinite(lat.omega2_im)))
    throw ConvergenceError("non-finite half-periods");

  lat.nome = std::exp(-kPi * lat.omega2_im / lat.omega1);
  const double qd = std::exp(-kPi * lat.omega1 / lat.omega2_im);
  lat.eta1 = kPi * kPi / (12.0 * lat.omega1) * (1.0 - 24.0 * lambert_e2(lat.nome));
  // eta2 from the dual nome, independently of the Legendre relation.
  lat.eta2_im = -kPi * kPi / (12.0 * lat.omega2_im) * (1.0 - 24.0 * lambert_e2(qd));

  const double shift = kOneTwelfth - 3.0 * c3;
  lat.tilde_eta1 = lat.eta1 + lat.omega1 * shift;
  lat.tilde_eta2_im = lat.eta2_im + lat.omega2_im * shift;
  lat.j_invariant = 1728.0 * inv.g2 * inv.g2 * inv.g2 / inv.discriminant;

  const ThetaValues t0 = jacobi_theta(0.0, lat.nome);
  lat.theta1_prime_0 = t0.theta1_prime.real();
  lat.theta2_0 = t0.theta2.real();
  lat.theta3_0 = t0.theta3.real();
  lat.theta4_0 = t0.theta4.real();
  return lat;
}

WeierstrassValues evaluate(Complex z, const LatticeData& lat) {
  const Reduced r = reduce(z, lat);
  require_off_pole(r, lat);
  const double k = kPi / (2.0 * lat.omega1);
  const ThetaValues t = jacobi_theta(k * r.z0, lat.nome);
  WeierstrassValues w;
  const Complex ratio = k * lat.theta3_0 * lat.theta4_0 * t.theta2 / t.theta1;
  w.wp_minus_e1 = ratio * ratio;
  w.wp = lat.e1 + w.wp_minus_e1;
  w.wp_prime = -2.0 * k * k * k * lat.theta1_prime_0 * lat.theta1_prime_0 * t.theta2 *
               t.theta3 * t.theta4 / (t.theta1 * t.theta1 * t.theta1);
  w.zeta = lat.eta1 * r.z0 / lat.omega1 + k * t.theta1_prime / t.theta1 +
           2.0 * r.m * lat.eta1 + 2.0 * r.n * lat.eta2();
  return w;
}

Complex wp(Complex z, const LatticeData& lat) { return evaluate(z, lat).wp; }
Complex wp_prime(Complex z, const LatticeData& lat) { return evaluate(z, lat).wp_prime; }
Complex zeta_w(Complex z, const LatticeData& lat) { return evaluate(z, lat).zeta; }

namespace {

// log of the quasi-periodicity factor sigma(z)/sigma(z0), excluding the sign.
Complex quasi_exponent(const Reduced& r, const LatticeData& lat) {
  const Complex w1 = lat.omega1;
  const Complex w2 = lat.omega2();
  return 2.0 * r.m * lat.eta1 * (r.z0 + r.m * w1) +
         2.0 * r.n * lat.eta2() * (r.z0 + 2.0 * r.m * w1 + r.n * w2);
}

}  // namespace

Complex sigma_w(Complex z, const LatticeData& lat) {
  const Reduced r = reduce(z, lat);
  const double k = kPi / (2.0 * lat.omega1);
  const ThetaValues t = jacobi_theta(k * r.z0, lat.nome);
  const Complex s0 = std::exp(lat.eta1 * r.z0 * r.z0 / (2.0 * lat.omega1)) * t.theta1 /
                     (k * lat.theta1_prime_0);
  const double sign = (static_cast<long long>(std::abs(r.m + r.n)) % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(quasi_exponent(r, lat)) * s0;
}

Complex log_sigma_w(Complex z, const LatticeData& lat) {
  const Reduced r = reduce(z, lat);
  require_off_pole(r, lat);
  const double k = kPi / (2.0 * lat.omega1);
  const ThetaValues t = jacobi_theta(k * r.z0, lat.nome);
  const Complex l0 = std::log(1.0 / k) + lat.eta1 * r.z0 * r.z0 / (2.0 * lat.omega1) +
                     std::log(t.theta1) - std::log(lat.theta1_prime_0);
  return l0 + Complex(0.0, kPi * (r.m + r.n)) + quasi_exponent(r, lat);
}

double pole_distance(Complex z, const LatticeData& lat) {
  return std::abs(reduce(z, lat).z0);
}

TertiaryValues tertiary_values(const LatticeData& lat) {
  const double tf = lat.tertiary();
  const WeierstrassValues a = evaluate(tf / 2.0, lat);
  const WeierstrassValues b = evaluate(lat.omega2() + tf, lat);
  return {a.wp.real(), b.wp.real(), a.wp_prime.real(), b.wp_prime.real()};
}

double varsigma(double s, const LatticeData& lat) {
  const Complex t = lat.omega2() + s * lat.omega1 / kPi;
  return (zeta_w(t, lat) - lat.eta2() - s * lat.eta1 / kPi).real();
}

Complex d_c3_wp(Complex z, const LatticeData& lat) {
  const double c3 = lat.c3;
  const WeierstrassValues w = evaluate(z, lat);
  return c3 * c3 / (12.0 * lat.discriminant) *
         (6.0 * w.wp * (1.0 - 36.0 * c3) + 3.0 * w.wp_prime * (12.0 * w.zeta + z - 36.0 * c3 * z) +
          72.0 * w.wp * w.wp + 24.0 * c3 - 1.0);
}

Complex d_c3_zeta(Complex z, const LatticeData& lat) {
  const double c3 = lat.c3;
  const WeierstrassValues w = evaluate(z, lat);
  return -c3 * c3 / (48.0 * lat.discriminant) *
         (72.0 * w.wp_prime + (w.zeta - w.wp * z) * (432.0 * c3 - 12.0) +
          144.0 * w.wp * w.zeta + (24.0 * c3 - 1.0) * z);
}

Complex d_c3_log_sigma(Complex z, const LatticeData& lat) {
  const double c3 = lat.c3;
  const WeierstrassValues w = evaluate(z, lat);
  return -c3 * c3 / (96.0 * lat.discriminant) *
         (144.0 * w.wp + (24.0 * c3 - 1.0) * z * z - 144.0 * w.zeta * w.zeta +
          (864.0 * c3 - 24.0) * (w.zeta * z - 1.0));
}

PeriodDerivatives d_c3_periods(const LatticeData& lat) {
  const double c3 = lat.c3;
  const double den = c3 * (1.0 - 27.0 * c3);
  const double shift = kOneTwelfth - 3.0 * c3;
  PeriodDerivatives d{};
  d.d_tilde_eta1 = -2.0 * lat.omega1;
  d.d_tilde_eta2_im = -2.0 * lat.omega2_im;
  d.d_omega1 = -3.0 * lat.tilde_eta1 / den;
  d.d_omega2_im = -3.0 * lat.tilde_eta2_im / den;
  // eta = tilde_eta - omega (1/12 - 3 c3)
  d.d_eta1 = d.d_tilde_eta1 - d.d_omega1 * shift + 3.0 * lat.omega1;
  d.d_eta2_im = d.d_tilde_eta2_im - d.d_omega2_im * shift + 3.0 * lat.omega2_im;
  return d;
}

}  // namespace gkcp2::elliptic
