#include <algorithm>
#include <cmath>
#include <functional>

#include "gkcp2/groupoid.hpp"
#include "gkcp2/toric.hpp"
#include "suite.hpp"

namespace gkcp2::verify {

namespace {

using namespace gkcp2::groupoid;

Complex rc(Suite& s, double r) { return {s.uniform(-r, r), s.uniform(-r, r)}; }

GroupoidPoint random_point(Suite& s) { return {rc(s, 1.0), rc(s, 1.0), rc(s, 0.8), rc(s, 0.8)}; }

double dist(const GroupoidPoint& a, const GroupoidPoint& b) { return (a.vec() - b.vec()).cwiseAbs().maxCoeff(); }
double dist(const BasePoint& a, const BasePoint& b) {
  return std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1]));
}

// A point h with s(h) = t(g).
GroupoidPoint composable_after(Suite& s, const GroupoidPoint& g) {
  const BasePoint t = target(g);
  return {t[0], t[1], rc(s, 0.8), rc(s, 0.8)};
}

// 4th-order differences of a map C^4 -> C^4.
CMat4 jacobian4(const std::function<CVec4(const CVec4&)>& f, const CVec4& x, double h = 1e-3) {
  CMat4 J;
  for (int k = 0; k < 4; ++k) {
    auto at = [&](double d) {
      CVec4 y = x;
      y(k) += d;
      return f(y);
    };
    J.col(k) = (at(-2 * h) - 8.0 * at(-h) + 8.0 * at(h) - at(2 * h)) / (12.0 * h);
  }
  return J;
}

}  // namespace

void run_groupoid(Suite& s) {
  double inverse = 0, units = 0, st = 0, assoc = 0, bracket = 0, spoisson = 0, tpoisson = 0;
  double kernel = 0, dtarget = 0, dpull = 0, zero_section = 0, transport = 0;
  const Complex I(0.0, 1.0);
  CMat4 canonical = CMat4::Zero();  // dq1 ^ dp1 + dq2 ^ dp2 in (q1, q2, p1, p2)
  canonical(0, 2) = canonical(1, 3) = 1.0;
  canonical(2, 0) = canonical(3, 1) = -1.0;

  for (int i = 0; i < 100; ++i) {
    const GroupoidPoint g = random_point(s);
    inverse = std::max(inverse, (omega0(g) * pi_bivector(g) - CMat4::Identity()).cwiseAbs().maxCoeff());

    units = std::max({units, dist(compose(g, unit(source(g))), g), dist(compose(unit(target(g)), g), g),
                      dist(source(unit(source(g))), target(unit(source(g))))});
    const GroupoidPoint h = composable_after(s, g);
    const GroupoidPoint hg = compose(h, g);
    st = std::max({st, dist(source(hg), source(g)), dist(target(hg), target(h))});
    const GroupoidPoint k = composable_after(s, h);
    assoc = std::max(assoc, dist(compose(compose(k, h), g), compose(k, compose(h, g))));

    const PushforwardResiduals r = target_pushforward_check(g);
    bracket = std::max(bracket, r.bracket_orthogonality);
    spoisson = std::max(spoisson, r.source_poisson);
    tpoisson = std::max(tpoisson, r.target_poisson);
    kernel = std::max(kernel, r.kernel_orthogonality);

    const DarbouxPoint d = darboux(g);
    dtarget = std::max({dtarget, dist(darboux_target(d), target(g)), dist(darboux_source(d), source(g))});
    const CMat4 D = jacobian4(
        [](const CVec4& v) {
          const DarbouxPoint q = darboux(GroupoidPoint::from_vec(v));
          return CVec4(q.q1, q.q2, q.p1, q.p2);
        },
        g.vec());
    // i Omega_0 = dq ^ dp pulled back
    dpull = std::max(dpull, (D.transpose() * canonical * D - I * omega0(g)).cwiseAbs().maxCoeff());

    // On the zero section the fibre terms drop except the base-independent dxi1 ^ dxi2 one.
    const GroupoidPoint g0{g.z1, g.z2, 0.0, 0.0};
    CMat4 expect = CMat4::Zero();
    expect(0, 2) = expect(1, 3) = 1.0;
    expect(2, 0) = expect(3, 1) = -1.0;
    expect(2, 3) = -g.z1 * g.z2;
    expect(3, 2) = g.z1 * g.z2;
    zero_section = std::max(zero_section, (I * omega0(g0) - expect).cwiseAbs().maxCoeff());

    // Chart change between the first two CP2 corners commutes with s and t.
    const toric::DelzantPolygon cp2 = toric::DelzantPolygon::cp2();
    const toric::IMat2 A = toric::transition_matrix(cp2.normals[0], cp2.normals[1], cp2.normals[1], cp2.normals[2]);
    const GroupoidPoint gt = change_chart(g, A);
    auto mono = [&](const BasePoint& z) {
      const auto [a, b] = toric::monomial_map(A, z[0], z[1]);
      return BasePoint{a, b};
    };
    transport = std::max({transport, dist(source(gt), mono(source(g))) / std::max(1.0, std::abs(gt.z1)),
                          dist(target(gt), mono(target(g))) / std::max(1.0, std::abs(gt.z1))});
  }
  s.check("omega_pi_inverse", "Omega_0 Pi = identity", inverse, 1e-12);
  s.check("unit_laws", "composition with units is the identity; s = t on units", units, 1e-9);
  s.check("source_target_of_product", "s(h g) = s(g), t(h g) = t(h)", st, 1e-10);
  s.check("associativity", "(k h) g = k (h g)", assoc, 1e-9);
  s.check("bracket_orthogonality", "{t* f, s* g} = 0 (differenced Jacobians)", bracket, 1e-10);
  s.check("source_poisson", "s_* Pi = -sigma at s(g)", spoisson, 1e-8);
  s.check("target_poisson", "t_* Pi = sigma at t(g)", tpoisson, 1e-8);
  s.check("kernel_orthogonality", "Omega_0(ker s_*, ker t_*) = 0", kernel, 1e-8);
  s.check("darboux_maps", "source and target in Darboux coordinates", dtarget, 1e-12);
  s.check("darboux_pullback", "i Omega_0 = dq ^ dp under the Darboux map", dpull, 1e-9);
  s.check("zero_section", "i Omega_0 on the zero section: dz ^ dxi - z1 z2 dxi1 ^ dxi2", zero_section, 1e-15);
  s.check("chart_transport", "source and target commute with the corner chart change", transport, 1e-12);

  double toy = 0;
  for (int i = 0; i < 50; ++i) {
    const CMat4 w = toy_omega(rc(s, 2.0), rc(s, 2.0), rc(s, 2.0), rc(s, 2.0));
    toy = std::max(toy, std::abs(w.determinant() - 1.0));
  }
  s.check("toy_model_det", "det Omega = 1 for the toy model on C^2 x C^2", toy, 1e-12);

  s.guarded("composability_error", "ComposabilityError when s(h) != t(g)", 0.5, [&] {
    const GroupoidPoint g = random_point(s);
    GroupoidPoint h = composable_after(s, g);
    h.z1 += 1e-6;
    try {
      compose(h, g);
    } catch (const ComposabilityError&) {
      return 0.0;
    }
    return 1.0;
  });
}

}  // namespace gkcp2::verify
