#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "suite.hpp"

namespace gkcp2::verify {

bool CheckReport::pass() const {
  return errors.empty() && !items.empty() &&
         std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"elliptic", "limits", "period_ode", "flow",
                                                 "gks",      "positivity", "groupoid", "gkp",
                                                 "area",     "toric"};
  return names;
}

std::vector<std::string> expand_group(const std::string& group) {
  if (group == "all") return suite_names();
  if (group == "elliptic") return {"elliptic", "limits", "period_ode", "area"};
  if (group == "gks") return {"gks", "positivity"};
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), group) != names.end()) return {group};
  throw std::invalid_argument("unknown suite: " + group);
}

CheckReport run_suite(const std::string& name, std::uint64_t seed, const Tolerances& overrides) {
  using Runner = void (*)(Suite&);
  static const std::map<std::string, Runner> runners = {
      {"elliptic", run_elliptic}, {"limits", run_limits},       {"period_ode", run_period_ode},
      {"area", run_area},         {"flow", run_flow},           {"toric", run_toric},
      {"groupoid", run_groupoid}, {"gks", run_gks},             {"positivity", run_positivity},
      {"gkp", run_gkp}};
  const auto it = runners.find(name);
  if (it == runners.end()) throw std::invalid_argument("unknown suite: " + name);
  Suite s(name, seed, overrides);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    it->second(s);
  } catch (const std::exception& e) {
    s.report().errors.push_back(name + ": " + e.what());
  }
  s.report().seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return s.report();
}

std::vector<CheckReport> run_group(const std::string& group, std::uint64_t seed,
                                   const Tolerances& overrides) {
  std::vector<CheckReport> out;
  for (const std::string& n : expand_group(group)) out.push_back(run_suite(n, seed, overrides));
  return out;
}

}  // namespace gkcp2::verify
