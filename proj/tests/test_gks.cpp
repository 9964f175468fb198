#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gkcp2/gks.hpp"

using namespace gkcp2;
using namespace gkcp2::gks;

namespace {
constexpr double kPi = std::numbers::pi;
double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("complex structures square to -1") {
  const PolarPoint p{0.014, 2.3};
  CHECK(max_abs(I_minus(p).m * I_minus(p).m + Mat4::Identity()) < 1e-12);
  CHECK(max_abs(I_plus(p, 0.8).m * I_plus(p, 0.8).m + Mat4::Identity()) < 1e-12);
}

TEST_CASE("relations between I_+, I_-, Q and F") {
  const LatticeData lat = elliptic::lattice_from_c3(0.022);
  const double s = 0.9, dt = 0.6;
  const Mat4 Im = J_matrix(lat, s), Ip = I_plus_matrix(lat, s, dt);
  const Mat4 Q = Q_matrix(lat), F = F_matrix(lat, s, dt);
  CHECK(max_abs(Ip - Im + Q * F) < 1e-10);
  CHECK(max_abs(Im.transpose() * F + F * Ip) < 1e-10);
  const Mat4 g = metric_matrix(lat, s, dt);
  CHECK(max_abs((Ip * Im - Im * Ip) * g.inverse() - Q) < 1e-9);
}

TEST_CASE("Q components") {
  const LatticeData lat = elliptic::lattice_from_c3(0.01);
  const Mat4 Q = Q_matrix(lat);
  CHECK(Q(kTheta1, kTheta2) == doctest::Approx(-1.0));
  CHECK(Q(kC3, kS) == doctest::Approx(4 * 0.01 * kPi / lat.omega1));
}

TEST_CASE("prop main off-diagonal relation") {
  const LatticeData lat = elliptic::lattice_from_c3(0.018);
  const Mat4 J = J_matrix(lat, 1.4);
  const double r = 4 * kPi * 0.018 / lat.omega1;
  CHECK(J(kC3, kTheta1) == doctest::Approx(-r * J(kTheta2, kS)).epsilon(1e-12));
  CHECK(J(kC3, kTheta2) == doctest::Approx(r * J(kTheta1, kS)).epsilon(1e-12));
}

TEST_CASE("dt = 0 gives the Kahler structure") {
  const PolarPoint p{0.02, 1.1};
  CHECK(max_abs(I_plus(p, 0.0).m - I_minus(p).m) == 0.0);
  CHECK(max_abs(F_two_form(p, 0.0).m) == 0.0);
}

TEST_CASE("metric positive at small dt") {
  const GksReport r = gks_report({0.02, 0.4}, 0.05, true);
  CHECK(r.min_metric_eigenvalue > 0.0);
  CHECK(r.nijenhuis_max < 1e-5);
  CHECK(r.residual_GKS_I < 1e-10);
  CHECK(positivity_scan(0.05, {0.005, 0.032, 5, 5, 2}).min_eigenvalue > 0.0);
}

TEST_CASE("field kinds") {
  for (FieldKind k : {FieldKind::I_minus, FieldKind::I_plus, FieldKind::Q, FieldKind::F, FieldKind::g,
                      FieldKind::sigma_plus_re, FieldKind::sigma_plus_im})
    CHECK(field_kind_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(field_kind_from_string("nope"), std::invalid_argument);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(I_minus({0.04, 0.0}), DomainError);
  CHECK_THROWS_AS(nijenhuis(FieldKind::I_minus, {1.0005e-6, 0.0}, 0.0), StencilError);
  CHECK_THROWS_AS(positivity_scan(0.05, {0.005, 0.032, 0, 3, 1}), DomainError);
}
