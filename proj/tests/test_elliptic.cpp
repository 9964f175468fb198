#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gkcp2/elliptic.hpp"
#include "gkcp2/oracles.hpp"

using namespace gkcp2;
using namespace gkcp2::elliptic;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;
}

TEST_CASE("invariants at c3 = 1/54 by direct substitution") {
  const double c3 = 1.0 / 54.0;
  const CubicInvariants inv = invariants_from_c3(c3);
  CHECK(std::abs(inv.g2 - (1.0 / 12 - 2 * c3)) < 1e-16);
  CHECK(std::abs(inv.g3 - (c3 / 6 - 1.0 / 216 - c3 * c3)) < 1e-16);
  const double disc = std::pow(c3, 3) * 0.5;
  CHECK(std::abs(inv.discriminant - disc) / disc < 1e-13);
  CHECK(std::abs(inv.g2 * inv.g2 * inv.g2 - 27 * inv.g3 * inv.g3 - disc) / disc < 1e-10);
}

TEST_CASE("j invariant reaches 1728 at its minimum") {
  const LatticeData lat = lattice_from_c3(1.0 / 12 - kSqrt3 / 36);
  CHECK(lat.j_invariant == doctest::Approx(1728.0).epsilon(1e-12));
  CHECK(lattice_from_c3(0.01).j_invariant > 1728.0);
  CHECK(lattice_from_c3(0.03).j_invariant > 1728.0);
}

TEST_CASE("roots are ordered and the half periods hit them") {
  const LatticeData lat = lattice_from_c3(0.02);
  CHECK(lat.e1 > lat.e3);
  CHECK(lat.e3 > lat.e2);
  CHECK(std::abs(wp(lat.omega1, lat) - lat.e1) < 1e-12);
  CHECK(std::abs(wp_prime(lat.omega1, lat)) < 1e-10);
  CHECK(std::abs(wp(lat.omega2(), lat) - lat.e2) < 1e-12);
}

TEST_CASE("tertiary point: wp = 1/12 and wp' = -c3") {
  for (double c3 : {0.001, 0.0185, 0.036}) {
    const LatticeData lat = lattice_from_c3(c3);
    CHECK(std::abs(wp(lat.tertiary(), lat) - 1.0 / 12) < 1e-12);
    CHECK(std::abs(wp_prime(lat.tertiary(), lat) + c3) < 1e-12);
  }
}

TEST_CASE("zeta at 2w1/3 and 4w1/3") {
  const LatticeData lat = lattice_from_c3(0.015);
  CHECK(std::abs(zeta_w(lat.tertiary(), lat) - (1.0 / 6 + 2 * lat.eta1 / 3)) < 1e-11);
  CHECK(std::abs(zeta_w(2 * lat.tertiary(), lat) - (-1.0 / 6 + 4 * lat.eta1 / 3)) < 1e-11);
}

TEST_CASE("Legendre relation") {
  const LatticeData lat = lattice_from_c3(0.007);
  const Complex lhs = lat.eta1 * lat.omega2() - lat.eta2() * lat.omega1;
  CHECK(std::abs(lhs - Complex(0.0, kPi / 2)) < 1e-12);
}

TEST_CASE("theta evaluation against the direct lattice sum") {
  const LatticeData lat = lattice_from_c3(1.0 / 54);
  const Complex z = 0.31 * lat.omega1 + 0.47 * lat.omega2();
  const Complex ref = oracle::lattice_sum_wp(z, lat);
  CHECK(std::abs(wp(z, lat) - ref) / std::abs(ref) < 1e-8);
}

TEST_CASE("omega1 against the period integral") {
  const LatticeData lat = lattice_from_c3(1.0 / 54);
  CHECK(std::abs(lat.omega1 - oracle::period_integral_omega1(lat.g2, lat.g3)) < 1e-9);
}

TEST_CASE("limits of the periods") {
  const LatticeData hi = lattice_from_c3(kC3Max - 1e-6);
  CHECK(std::abs(hi.omega1 - kSqrt3 * kPi) < 1e-2);
  const LatticeData lo = lattice_from_c3(1e-6);
  CHECK(std::abs(lo.omega2_im - kPi) < 1e-3);
  // omega1 diverges logarithmically at c3 -> 0
  CHECK(lo.omega1 > 15.0);
}

TEST_CASE("varsigma is odd, periodic and vanishes at 0") {
  const LatticeData lat = lattice_from_c3(0.021);
  CHECK(varsigma(0.0, lat) == doctest::Approx(0.0));
  for (double s : {0.3, 1.7, 4.0}) {
    CHECK(std::abs(varsigma(-s, lat) + varsigma(s, lat)) < 1e-11);
    CHECK(std::abs(varsigma(s + 2 * kPi, lat) - varsigma(s, lat)) < 1e-11);
  }
}

TEST_CASE("second-order ODE for omega1") {
  auto w = [](double c) { return lattice_from_c3(c).omega1; };
  auto dw = [](double c) { return d_c3_periods(lattice_from_c3(c)).d_omega1; };
  const double c = 0.02, h = 1e-5;
  const double lhs = ((c + h) * (1 - 27 * (c + h)) * dw(c + h) - (c - h) * (1 - 27 * (c - h)) * dw(c - h)) / (2 * h);
  CHECK(std::abs(lhs - 6 * w(c)) / (6 * w(c)) < 1e-6);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(lattice_from_c3(0.5), DomainError);
  CHECK_THROWS_AS(lattice_from_c3(0.0), DomainError);
  CHECK_THROWS_AS(lattice_from_c3(-0.01), DomainError);
  CHECK_THROWS_AS(lattice_from_c3(kC3Max - 1e-8), DomainError);
  CHECK_THROWS_AS(real_half_periods(0.0, kC3Max), DomainError);
  CHECK_NOTHROW(lattice_from_c3(5e-7, GuardBand{1e-7, kC3Max - 1e-7}));
}
