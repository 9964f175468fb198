// One line per acceptance criterion: the backing suite must pass every check
// and finish inside its time budget.

#include <cstdio>
#include <string>
#include <vector>

#include "gkcp2/verify.hpp"

namespace {

struct Criterion {
  const char* name;
  const char* suite;
  double budget_s;
};

const std::vector<Criterion> kCriteria = {
    {"Elliptic suite", "elliptic", 30},   {"Limits", "limits", 5},
    {"Period ODE", "period_ode", 10},     {"Flow suite", "flow", 60},
    {"GKS suite", "gks", 300},            {"Positivity", "positivity", 120},
    {"Groupoid suite", "groupoid", 30},   {"GKP suite", "gkp", 60},
    {"Area identity", "area", 10},
};

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 42;
  int failed = 0;
  for (const Criterion& c : kCriteria) {
    const gkcp2::verify::CheckReport r = gkcp2::verify::run_suite(c.suite, seed);
    // worst residual relative to its tolerance
    double worst = 0;
    std::string worst_id;
    int bad = 0;
    for (const auto& it : r.items) {
      if (!it.pass) ++bad;
      const double ratio = it.tolerance > 0 ? it.residual / it.tolerance : (it.residual < 0 ? 0.0 : 1.0);
      if (worst_id.empty() || ratio > worst) {
        worst = ratio;
        worst_id = it.id;
      }
    }
    const bool ok = r.pass() && r.seconds < c.budget_s;
    if (!ok) ++failed;
    std::printf("%s %-16s checks=%-3zu failed=%-2d worst=%s (%.2e of tol)  runtime %.2f s / %.0f s\n",
                ok ? "PASS" : "FAIL", c.name, r.items.size(), bad, worst_id.c_str(), worst, r.seconds,
                c.budget_s);
    for (const auto& it : r.items)
      if (!it.pass)
        std::printf("     %s residual %.3e tol %.1e  %s\n", it.id.c_str(), it.residual, it.tolerance,
                    it.anchor.c_str());
    for (const auto& e : r.errors) std::printf("     error: %s\n", e.c_str());
  }
  std::printf("%s: %d of %zu criteria failed\n", failed ? "FAIL" : "PASS", failed, kCriteria.size());
  return failed ? 1 : 0;
}
