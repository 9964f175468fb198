// gkcp2: parameter tables, contour and field export, verification suites and
// potential evaluation.  Exit codes: 0 ok, 1 failed check, 2 usage,
// 3 domain error, 4 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkcp2/elliptic.hpp"
#include "gkcp2/flow.hpp"
#include "gkcp2/gkp.hpp"
#include "gkcp2/gks.hpp"
#include "gkcp2/verify.hpp"

using json = nlohmann::json;
using namespace gkcp2;

namespace {

constexpr double kPi = std::numbers::pi;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kDomain = 3, kNumerical = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Rows of named numeric columns, emitted as CSV or as a JSON array of flat objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << num(r[i]);
      os << '\n';
    }
  }

  json to_json() const {
    json arr = json::array();
    for (const auto& r : rows) {
      json o = json::object();
      for (std::size_t i = 0; i < r.size(); ++i) o[columns[i]] = r[i];
      arr.push_back(o);
    }
    return arr;
  }
};

struct Output {
  std::string format = "csv";
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + path);
    f << text;
  }

  void emit(const Table& t, const json& meta = json::object()) const {
    if (format == "json") {
      json doc = meta;
      doc["rows"] = t.to_json();
      doc["errors"] = json::array();
      write(doc.dump(2) + "\n");
    } else {
      std::ostringstream os;
      t.csv(os);
      write(os.str());
    }
  }
};

void require_finite(const Table& t) {
  for (const auto& r : t.rows)
    for (double v : r)
      if (!std::isfinite(v)) throw ConvergenceError("non-finite value in output");
}

Table params_table(double c3) {
  const elliptic::LatticeData lat = elliptic::lattice_from_c3(c3);
  const double legendre = std::abs(lat.eta1 * lat.omega2_im - lat.eta2_im * lat.omega1 - kPi / 2);
  Table t;
  t.columns = {"c3",     "g2",         "g3",          "discriminant", "j",    "e1",
               "e2",     "e3",         "omega1",      "omega2_abs",   "eta1", "eta2_abs",
               "tilde_eta1", "tilde_eta2_abs", "legendre_residual"};
  t.rows.push_back({c3, lat.g2, lat.g3, lat.discriminant, lat.j_invariant, lat.e1, lat.e2, lat.e3,
                    lat.omega1, lat.omega2_im, lat.eta1, std::abs(lat.eta2_im), lat.tilde_eta1,
                    std::abs(lat.tilde_eta2_im), legendre});
  return t;
}

Table contour_table(double c3, int n) {
  const elliptic::LatticeData lat = elliptic::lattice_from_c3(c3);
  Table t;
  t.columns = {"s", "y1", "y2", "y3"};
  for (int k = 0; k < n; ++k) {
    const double s = 2 * kPi * k / n;
    const flow::TriplePoint y = flow::y_of_polar(lat, s);
    t.rows.push_back({s, y.y1, y.y2, y.y3});
  }
  return t;
}

Table field_table(gks::FieldKind kind, double dt, int n_c3, int n_s, double lo, double hi) {
  Table t;
  t.columns = {"c3", "s", "dt"};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t.columns.push_back("m" + std::to_string(a) + std::to_string(b));
  const bool metric = kind == gks::FieldKind::g;
  if (metric) t.columns.push_back("min_eigenvalue");
  for (int i = 0; i < n_c3; ++i) {
    const double c3 = lo + (hi - lo) * i / (n_c3 - 1);
    for (int j = 0; j < n_s; ++j) {
      const double s = 2 * kPi * j / n_s;
      const gks::FieldSample f = gks::sample(kind, {c3, s}, dt);
      std::vector<double> row = {c3, s, dt};
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) row.push_back(f.m(a, b));
      if (metric) {
        const gks::Mat4 g = 0.5 * (f.m + f.m.transpose());
        row.push_back(Eigen::SelfAdjointEigenSolver<gks::Mat4>(g).eigenvalues().minCoeff());
      }
      t.rows.push_back(row);
    }
  }
  return t;
}

verify::Tolerances parse_tolerances(const std::vector<std::string>& specs) {
  verify::Tolerances tol;
  for (const std::string& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--tol expects NAME=VALUE, got " + s);
    double v = 0;
    try {
      std::size_t used = 0;
      v = std::stod(s.substr(eq + 1), &used);
      if (used != s.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("invalid tolerance value in " + s);
    }
    if (!(v > 0) || !std::isfinite(v)) throw UsageError("tolerances must be positive: " + s);
    tol[s.substr(0, eq)] = v;
  }
  return tol;
}

int run_check(const std::string& suite, std::uint64_t seed, const verify::Tolerances& tol,
              const Output& out, bool format_given) {
  const std::vector<verify::CheckReport> reports = verify::run_group(suite, seed, tol);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass();
  if (format_given && out.format == "json") {
    json doc;
    doc["suite"] = suite;
    doc["seed"] = seed;
    doc["pass"] = ok;
    doc["suites"] = json::array();
    doc["errors"] = json::array();
    for (const auto& r : reports) {
      json js{{"suite", r.suite}, {"pass", r.pass()}, {"seconds", r.seconds}, {"items", json::array()}};
      for (const auto& c : r.items)
        js["items"].push_back({{"id", c.id},
                               {"anchor", c.anchor},
                               {"residual", std::isfinite(c.residual) ? json(c.residual) : json(nullptr)},
                               {"tolerance", c.tolerance},
                               {"pass", c.pass}});
      for (const auto& e : r.errors) doc["errors"].push_back(e);
      doc["suites"].push_back(js);
    }
    out.write(doc.dump(2) + "\n");
  } else if (format_given && out.format == "csv") {
    std::ostringstream os;
    os << "id,anchor,residual,tolerance,pass\n";
    for (const auto& r : reports)
      for (const auto& c : r.items)
        os << c.id << ",\"" << c.anchor << "\"," << num(c.residual) << ',' << num(c.tolerance) << ','
           << (c.pass ? 1 : 0) << '\n';
    out.write(os.str());
  } else {
    std::ostringstream os;
    for (const auto& r : reports) {
      for (const auto& c : r.items) {
        char line[128];
        std::snprintf(line, sizeof line, "%-4s %-40s %10.3e < %8.1e  ", c.pass ? "PASS" : "FAIL",
                      c.id.c_str(), c.residual, c.tolerance);
        os << line << c.anchor << '\n';
      }
      for (const auto& e : r.errors) os << "ERROR " << e << '\n';
      char line[96];
      std::snprintf(line, sizeof line, "== %s: %s (%.2f s)\n", r.suite.c_str(), r.pass() ? "pass" : "FAIL",
                    r.seconds);
      os << line;
    }
    os << (ok ? "overall: pass\n" : "overall: FAIL\n");
    out.write(os.str());
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalised Kahler structure on CP2: elliptic flow numerics and checks"};
  app.require_subcommand(1);
  Output out;
  double c3 = 1.0 / 54, s = 0.0, dt = 0.0;
  int grid_c3 = 20, grid_s = 20, n = 100;
  double c3_lo = 0.005, c3_hi = 0.032;
  std::string kind = "I_minus", suite = "all";
  std::uint64_t seed = 42;
  std::vector<std::string> tol_specs;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", out.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out.path, "output file (default stdout)");
  };

  CLI::App* params = app.add_subcommand("params", "lattice data table for one c3");
  params->add_option("--c3", c3, "contour parameter in (0, 1/27)")->required();
  add_output(params);

  CLI::App* contour = app.add_subcommand("contour", "points (s, y1, y2, y3) along one contour");
  contour->add_option("--c3", c3)->required();
  contour->add_option("--n", n, "number of equally spaced s samples")->check(CLI::PositiveNumber);
  add_output(contour);

  CLI::App* field = app.add_subcommand("field", "tensor field samples over a (c3, s) grid");
  field->add_option("--kind", kind, "I_minus, I_plus, Q, F, g, sigma_plus_re, sigma_plus_im");
  field->add_option("--dt", dt, "flow time");
  field->add_option("--grid-c3", grid_c3, "c3 grid size (>= 2)");
  field->add_option("--grid-s", grid_s, "s grid size (>= 2)");
  field->add_option("--c3-lo", c3_lo);
  field->add_option("--c3-hi", c3_hi);
  add_output(field);

  CLI::App* check = app.add_subcommand("check", "run verification suites");
  check->add_option("--suite", suite, "all, elliptic, toric, groupoid, flow, gks, gkp, or a single suite");
  check->add_option("--seed", seed);
  check->add_option("--tol", tol_specs, "override tolerance NAME=VALUE (NAME = check id or suite)");
  add_output(check);

  CLI::App* gkp_cmd = app.add_subcommand("gkp", "generalised Kahler potential at one point");
  gkp_cmd->add_option("--c3", c3)->required();
  gkp_cmd->add_option("--s", s);
  gkp_cmd->add_option("--dt", dt);
  add_output(gkp_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const bool json_out = out.format == "json";
  auto fail = [&](int code, const std::string& msg) {
    std::cerr << "error: " << msg << '\n';
    if (json_out) {
      try {
        out.write(json{{"errors", json::array({msg})}}.dump(2) + "\n");
      } catch (...) {
      }
    }
    return code;
  };

  try {
    if (params->parsed()) {
      const Table t = params_table(c3);
      require_finite(t);
      out.emit(t);
    } else if (contour->parsed()) {
      const Table t = contour_table(c3, n);
      require_finite(t);
      out.emit(t, {{"c3", c3}});
    } else if (field->parsed()) {
      if (grid_c3 < 2 || grid_s < 2) throw UsageError("grid sizes must be >= 2");
      if (!(c3_lo < c3_hi)) throw UsageError("--c3-lo must be below --c3-hi");
      gks::FieldKind k;
      try {
        k = gks::field_kind_from_string(kind);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      elliptic::check_c3(c3_lo);
      elliptic::check_c3(c3_hi);
      const Table t = field_table(k, dt, grid_c3, grid_s, c3_lo, c3_hi);
      require_finite(t);
      out.emit(t, {{"kind", kind}, {"dt", dt}});
    } else if (check->parsed()) {
      const verify::Tolerances tol = parse_tolerances(tol_specs);
      try {
        verify::expand_group(suite);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      return run_check(suite, seed, tol, out, check->count("--format") > 0);
    } else if (gkp_cmd->parsed()) {
      const gkp::GkpValue v = gkp::potential({c3, flow::reduce_s(s)}, dt);
      const double h = 1e-6;
      // K(0) = 0, so the one-sided slope is K(h)/h
      const double slope = gkp::potential({c3, flow::reduce_s(s)}, h).K / h;
      const double expected = 0.25 * std::log(c3);
      if (gkp_cmd->count("--format") == 0 || json_out) {
        json doc{{"c3", c3},
                 {"s", s},
                 {"dt", dt},
                 {"K", v.K},
                 {"fubini_study_part", v.fubini_study_part},
                 {"correction_part", v.correction_part},
                 {"quad_order_used", v.quad_order_used},
                 {"slope_check",
                  {{"slope", slope}, {"expected", expected}, {"residual", std::abs(slope - expected)},
                   {"pass", std::abs(slope - expected) < 1e-6}}},
                 {"errors", json::array()}};
        out.write(doc.dump(2) + "\n");
      } else {
        Table t;
        t.columns = {"c3", "s", "dt", "K", "fubini_study_part", "correction_part", "quad_order_used",
                     "slope", "slope_expected"};
        t.rows.push_back({c3, s, dt, v.K, v.fubini_study_part, v.correction_part,
                          double(v.quad_order_used), slope, expected});
        out.emit(t);
      }
    }
  } catch (const UsageError& e) {
    return fail(kUsage, e.what());
  } catch (const DomainError& e) {
    return fail(kDomain, e.what());
  } catch (const BoundaryError& e) {
    return fail(kDomain, e.what());
  } catch (const InvalidCornerError& e) {
    return fail(kDomain, e.what());
  } catch (const gkcp2::Error& e) {
    return fail(kNumerical, e.what());
  } catch (const std::exception& e) {
    return fail(kNumerical, e.what());
  }
  return kOk;
}
