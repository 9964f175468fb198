#pragma once

// Residual batteries.  Every check compares a computed residual against a
// tolerance (pass iff residual < tolerance); tolerances are keyed by check id
// and can be overridden, either per id ("gks.gks_I") or per suite ("gks").

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gkcp2::verify {

struct CheckItem {
  std::string id;
  std::string anchor;  // which identity is being tested
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckItem> items;
  double seconds = 0.0;
  std::vector<std::string> errors;  // exceptions raised while running the suite

  bool pass() const;
};

using Tolerances = std::map<std::string, double>;

/// Fine-grained suites, one per acceptance criterion:
/// elliptic, limits, period_ode, flow, gks, positivity, groupoid, gkp, area, toric.
const std::vector<std::string>& suite_names();

/// CLI groups: all, elliptic (with limits, period_ode, area), toric, groupoid,
/// flow, gks (with positivity), gkp, or any fine-grained name.
std::vector<std::string> expand_group(const std::string& group);

CheckReport run_suite(const std::string& name, std::uint64_t seed, const Tolerances& overrides = {});

std::vector<CheckReport> run_group(const std::string& group, std::uint64_t seed,
                                   const Tolerances& overrides = {});

}  // namespace gkcp2::verify
