#include <cmath>

#include "doctest.h"
#include "gkcp2/toric.hpp"

using namespace gkcp2;
using namespace gkcp2::toric;

TEST_CASE("CP2 Hessian at the centre") {
  const GuilleminData d = guillemin(DelzantPolygon::cp2(), {1.0 / 3, 1.0 / 3});
  Mat2 G, Ginv;
  G << 3.0, 1.5, 1.5, 3.0;
  Ginv << 4.0 / 9, -2.0 / 9, -2.0 / 9, 4.0 / 9;
  CHECK((d.hess - G).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((d.hess_inv - Ginv).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("complex structure and metric on both fixtures") {
  for (const DelzantPolygon& poly : {DelzantPolygon::cp2(), DelzantPolygon::square()}) {
    for (const MomentPoint y : {MomentPoint{0.2, 0.3}, MomentPoint{0.1, 0.45}}) {
      const Mat4 J = complex_structure_ytheta(poly, y);
      const Mat4 g = metric_ytheta(poly, y);
      CHECK((J * J + Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((J.transpose() * g * J - g).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(Eigen::SelfAdjointEigenSolver<Mat4>(g).eigenvalues().minCoeff() > 0.0);
    }
  }
}

TEST_CASE("inhomogeneous coordinates") {
  const auto [z1, z2] = cp2_coords({1.0 / 3, 1.0 / 3}, Vec2::Zero());
  CHECK(std::abs(z1 - 1.0) < 1e-15);
  CHECK(std::abs(z2 - 1.0) < 1e-15);
  const MomentPoint y{0.15, 0.6};
  const auto [w1, w2] = cp2_coords(y, Vec2(0.4, -1.0));
  const MomentPoint back = cp2_moment_from_coords(w1, w2);
  CHECK(std::abs(back.y1 - y.y1) < 1e-14);
  CHECK(std::abs(back.y2 - y.y2) < 1e-14);
}

TEST_CASE("Poisson norm") {
  CHECK(std::abs(poisson_norm({1.0 / 3, 1.0 / 3}) - 2.0 / 27) < 1e-16);
  const MomentPoint y{0.2, 0.5};
  CHECK(std::abs(poisson_norm_general(DelzantPolygon::cp2(), y) - poisson_norm(y)) < 1e-12);
  CHECK(poisson_norm({1e-8, 0.5}) < 1e-8);
}

TEST_CASE("Hitchin Poisson tensor components") {
  const MomentPoint y{0.2, 0.3};
  const Mat4 Q = hitchin_Q_ytheta(y);
  CHECK(Q(2, 3) == doctest::Approx(4 * 0.2 * 0.3 * 0.5));
  CHECK(Q(0, 1) == doctest::Approx(-1.0));
}

TEST_CASE("corner transitions") {
  const DelzantPolygon cp2 = DelzantPolygon::cp2();
  const IMat2 A = transition_matrix(cp2.normals[0], cp2.normals[1], cp2.normals[1], cp2.normals[2]);
  CHECK(A.cast<double>().determinant() == doctest::Approx(1.0));
  CHECK(transition_matrix(cp2.normals[0], cp2.normals[1], cp2.normals[0], cp2.normals[1]) == IMat2::Identity());
  const MomentPoint y{0.25, 0.35};
  const auto charts = complex_coords(cp2, y, Vec2(0.3, 0.9));
  REQUIRE(charts.size() == 3);
  const auto [w1, w2] = monomial_map(A, charts[0].z1, charts[0].z2);
  CHECK(std::abs(w1 - charts[1].z1) < 1e-10);
  CHECK(std::abs(w2 - charts[1].z2) < 1e-10);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(face_values(DelzantPolygon::cp2(), {0.0, 0.5}), BoundaryError);
  CHECK_THROWS_AS(guillemin(DelzantPolygon::cp2(), {0.6, 0.6}), BoundaryError);
  DelzantPolygon bad = DelzantPolygon::cp2();
  bad.normals[2] = IVec2(-1, -2);
  CHECK_THROWS_AS(bad.validate(), InvalidCornerError);
  CHECK_THROWS_AS(transition_matrix(IVec2(1, 0), IVec2(1, 2), IVec2(0, 1), IVec2(-1, 0)), InvalidCornerError);
}
