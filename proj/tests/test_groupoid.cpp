#include <cmath>

#include "doctest.h"
#include "gkcp2/groupoid.hpp"

using namespace gkcp2;
using namespace gkcp2::groupoid;

namespace {
const GroupoidPoint kG{{0.3, -0.2}, {-0.5, 0.4}, {0.1, 0.6}, {-0.7, 0.2}};
double dist(const BasePoint& a, const BasePoint& b) { return std::abs(a[0] - b[0]) + std::abs(a[1] - b[1]); }
}  // namespace

TEST_CASE("Omega_0 and Pi are inverse") {
  CHECK((omega0(kG) * pi_bivector(kG) - CMat4::Identity()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("units") {
  const BasePoint z{Complex(0.2, 0.1), Complex(-0.4, 0.3)};
  const GroupoidPoint u = unit(z);
  CHECK(dist(source(u), z) < 1e-15);
  CHECK(dist(target(u), z) < 1e-15);
  const GroupoidPoint g = compose(kG, unit(source(kG)));
  CHECK((g.vec() - kG.vec()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("composition") {
  const BasePoint t = target(kG);
  const GroupoidPoint h{t[0], t[1], {0.2, 0.2}, {-0.1, 0.5}};
  const GroupoidPoint hg = compose(h, kG);
  CHECK(dist(source(hg), source(kG)) < 1e-12);
  CHECK(dist(target(hg), target(h)) < 1e-12);
  GroupoidPoint bad = h;
  bad.z2 += 1e-5;
  CHECK_THROWS_AS(compose(bad, kG), ComposabilityError);
}

TEST_CASE("Darboux source and target") {
  const DarbouxPoint d = darboux(kG);
  CHECK(dist(darboux_source(d), source(kG)) < 1e-14);
  CHECK(dist(darboux_target(d), target(kG)) < 1e-14);
}

TEST_CASE("pushforwards of Pi") {
  const PushforwardResiduals r = target_pushforward_check(kG);
  CHECK(r.source_poisson < 1e-8);
  CHECK(r.target_poisson < 1e-8);
  CHECK(r.bracket_orthogonality < 1e-10);
  CHECK(r.kernel_orthogonality < 1e-8);
}

TEST_CASE("toy model determinant") {
  CHECK(std::abs(toy_omega({0.3, 0.1}, {-0.2, 0.5}, {0.7, -0.4}, {0.1, 0.9}).determinant() - 1.0) < 1e-13);
}
