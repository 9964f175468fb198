#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gkcp2/elliptic.hpp"
#include "gkcp2/flow.hpp"
#include "gkcp2/gkp.hpp"
#include "gkcp2/gks.hpp"
#include "gkcp2/groupoid.hpp"
#include "gkcp2/toric.hpp"
#include "gkcp2/verify.hpp"

namespace py = pybind11;
using namespace gkcp2;

namespace {

py::dict lattice_dict(const elliptic::LatticeData& l) {
  py::dict d;
  d["c3"] = l.c3;
  d["g2"] = l.g2;
  d["g3"] = l.g3;
  d["discriminant"] = l.discriminant;
  d["omega1"] = l.omega1;
  d["omega2"] = l.omega2();
  d["eta1"] = l.eta1;
  d["eta2"] = l.eta2();
  d["tilde_eta1"] = l.tilde_eta1;
  d["tilde_eta2"] = l.tilde_eta2();
  d["e1"] = l.e1;
  d["e2"] = l.e2;
  d["e3"] = l.e3;
  d["j_invariant"] = l.j_invariant;
  return d;
}

py::tuple triple(const flow::TriplePoint& y) { return py::make_tuple(y.y1, y.y2, y.y3); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalised Kahler structures on CP2 from the Hitchin flow";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<BoundaryError>(m, "BoundaryError", base.ptr());
  py::register_exception<InvalidCornerError>(m, "InvalidCornerError", base.ptr());
  py::register_exception<ComposabilityError>(m, "ComposabilityError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<QuadratureError>(m, "QuadratureError", base.ptr());
  py::register_exception<StencilError>(m, "StencilError", base.ptr());

  m.attr("C3_MAX") = elliptic::kC3Max;

  // elliptic
  m.def("lattice", [](double c3) { return lattice_dict(elliptic::lattice_from_c3(c3)); }, py::arg("c3"),
        "Periods, quasi-periods, roots and invariants for the lattice of c3.");
  m.def("wp", [](std::complex<double> z, double c3) { return elliptic::wp(z, elliptic::lattice_from_c3(c3)); },
        py::arg("z"), py::arg("c3"));
  m.def("wp_prime",
        [](std::complex<double> z, double c3) { return elliptic::wp_prime(z, elliptic::lattice_from_c3(c3)); },
        py::arg("z"), py::arg("c3"));
  m.def("zeta", [](std::complex<double> z, double c3) { return elliptic::zeta_w(z, elliptic::lattice_from_c3(c3)); },
        py::arg("z"), py::arg("c3"));
  m.def("varsigma", [](double s, double c3) { return elliptic::varsigma(s, elliptic::lattice_from_c3(c3)); },
        py::arg("s"), py::arg("c3"));

  // flow
  m.def("y_of_polar", [](double c3, double s) { return triple(flow::y_of_polar({c3, s})); }, py::arg("c3"),
        py::arg("s"), "Moment coordinates (y1, y2, y3) at the polar point (c3, s).");
  m.def("polar_of_y",
        [](double y1, double y2) {
          const flow::PolarPoint p = flow::polar_of_y(y1, y2);
          return py::make_tuple(p.c3, p.s);
        },
        py::arg("y1"), py::arg("y2"));
  m.def("flow_map",
        [](double c3, double s, double dt) {
          const flow::PolarPoint p = flow::flow_map({c3, s}, dt);
          return py::make_tuple(p.c3, p.s);
        },
        py::arg("c3"), py::arg("s"), py::arg("dt"));
  m.def("ode_oracle",
        [](std::array<double, 3> y, double dt) { return triple(flow::ode_oracle({y[0], y[1], y[2]}, dt)); },
        py::arg("y"), py::arg("dt"));

  // generalised Kahler fields, as 4x4 arrays in (theta1, theta2, c3, s)
  m.def("field",
        [](const std::string& kind, double c3, double s, double dt) {
          return Eigen::Matrix4d(gks::sample(gks::field_kind_from_string(kind), {c3, s}, dt).m);
        },
        py::arg("kind"), py::arg("c3"), py::arg("s"), py::arg("dt") = 0.0,
        "kind is one of I_minus, I_plus, Q, F, g, sigma_plus_re, sigma_plus_im.");
  m.def("nijenhuis",
        [](const std::string& kind, double c3, double s, double dt) {
          return gks::nijenhuis(gks::field_kind_from_string(kind), {c3, s}, dt);
        },
        py::arg("kind"), py::arg("c3"), py::arg("s"), py::arg("dt") = 0.0);
  m.def("min_metric_eigenvalue",
        [](double dt, int n_c3, int n_s) {
          return gks::positivity_scan(dt, {0.005, 0.032, n_c3, n_s, 1}).min_eigenvalue;
        },
        py::arg("dt"), py::arg("n_c3") = 20, py::arg("n_s") = 20);

  // potential
  m.def("gkp",
        [](double c3, double s, double dt, int quad_order) {
          const gkp::GkpValue v = gkp::potential({c3, s}, dt, quad_order);
          py::dict d;
          d["K"] = v.K;
          d["fubini_study_part"] = v.fubini_study_part;
          d["correction_part"] = v.correction_part;
          d["quad_order_used"] = v.quad_order_used;
          return d;
        },
        py::arg("c3"), py::arg("s"), py::arg("dt"), py::arg("quad_order") = 16);
  m.def("local_Q_coords",
        [](double c3, double s, double dt, double t1, double t2) { return gkp::local_Q_coords({c3, s}, dt, t1, t2); },
        py::arg("c3"), py::arg("s"), py::arg("dt"), py::arg("theta1"), py::arg("theta2"));

  // toric and groupoid
  m.def("cp2_hessian",
        [](double y1, double y2) {
          const toric::GuilleminData d = toric::guillemin(toric::DelzantPolygon::cp2(), {y1, y2});
          return py::make_tuple(Eigen::Matrix2d(d.hess), Eigen::Matrix2d(d.hess_inv));
        },
        py::arg("y1"), py::arg("y2"));
  m.def("poisson_norm", [](double y1, double y2) { return toric::poisson_norm({y1, y2}); }, py::arg("y1"),
        py::arg("y2"));
  m.def("groupoid_source_target",
        [](std::complex<double> z1, std::complex<double> z2, std::complex<double> xi1, std::complex<double> xi2) {
          const groupoid::GroupoidPoint g{z1, z2, xi1, xi2};
          return py::make_tuple(groupoid::source(g), groupoid::target(g));
        },
        py::arg("z1"), py::arg("z2"), py::arg("xi1"), py::arg("xi2"));

  // verification
  m.def("suite_names", &verify::suite_names);
  m.def("check",
        [](const std::string& group, std::uint64_t seed, const verify::Tolerances& tol) {
          py::list out;
          for (const verify::CheckReport& r : verify::run_group(group, seed, tol)) {
            py::list items;
            for (const verify::CheckItem& c : r.items) {
              py::dict it;
              it["id"] = c.id;
              it["anchor"] = c.anchor;
              it["residual"] = c.residual;
              it["tolerance"] = c.tolerance;
              it["pass"] = c.pass;
              items.append(it);
            }
            py::dict d;
            d["suite"] = r.suite;
            d["pass"] = r.pass();
            d["seconds"] = r.seconds;
            d["items"] = items;
            d["errors"] = r.errors;
            out.append(d);
          }
          return out;
        },
        py::arg("suite") = "all", py::arg("seed") = 42, py::arg("tolerances") = verify::Tolerances{});
}
