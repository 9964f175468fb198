#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "gkcp2/verify.hpp"

namespace gkcp2::verify {

// Collects check items for one suite, resolving tolerance overrides.
class Suite {
 public:
  Suite(std::string name, std::uint64_t seed, const Tolerances& overrides)
      : rng_(seed), overrides_(overrides) {
    report_.suite = std::move(name);
  }

  void check(const std::string& id, const std::string& anchor, double residual, double tol) {
    const std::string full = report_.suite + "." + id;
    if (auto it = overrides_.find(full); it != overrides_.end()) {
      tol = it->second;
    } else if (auto jt = overrides_.find(report_.suite); jt != overrides_.end()) {
      tol = jt->second;
    }
    report_.items.push_back({full, anchor, residual, tol, std::isfinite(residual) && residual < tol});
  }

  // Runs a block; an exception becomes a failed item with the same id.
  void guarded(const std::string& id, const std::string& anchor, double tol,
               const std::function<double()>& body) {
    try {
      check(id, anchor, body(), tol);
    } catch (const std::exception& e) {
      report_.errors.push_back(report_.suite + "." + id + ": " + e.what());
      check(id, anchor, INFINITY, tol);
    }
  }

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  std::mt19937_64& rng() { return rng_; }
  CheckReport& report() { return report_; }

 private:
  std::mt19937_64 rng_;
  const Tolerances& overrides_;
  CheckReport report_;
};

void run_elliptic(Suite& s);
void run_limits(Suite& s);
void run_period_ode(Suite& s);
void run_area(Suite& s);
void run_flow(Suite& s);
void run_toric(Suite& s);
void run_groupoid(Suite& s);
void run_gks(Suite& s);
void run_positivity(Suite& s);
void run_gkp(Suite& s);

}  // namespace gkcp2::verify
