#include <algorithm>

#include "doctest.h"
#include "gkcp2/verify.hpp"

using namespace gkcp2::verify;

TEST_CASE("suite groups") {
  CHECK(suite_names().size() == 10);
  CHECK(expand_group("all") == suite_names());
  CHECK(expand_group("gks") == std::vector<std::string>{"gks", "positivity"});
  CHECK(expand_group("elliptic").size() == 4);
  CHECK(expand_group("flow") == std::vector<std::string>{"flow"});
  CHECK_THROWS_AS(expand_group("nope"), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("nope", 1), std::invalid_argument);
}

TEST_CASE("toric suite passes and is deterministic") {
  const CheckReport a = run_suite("toric", 42), b = run_suite("toric", 42);
  CHECK(a.pass());
  REQUIRE(a.items.size() == b.items.size());
  for (std::size_t i = 0; i < a.items.size(); ++i) CHECK(a.items[i].residual == b.items[i].residual);
}

TEST_CASE("tolerance overrides") {
  const CheckReport strict = run_suite("flow", 7, {{"flow", 1e-300}});
  CHECK_FALSE(strict.pass());
  const CheckReport one = run_suite("flow", 7, {{"flow.chart_jacobian", 1e-300}});
  const auto failed = std::count_if(one.items.begin(), one.items.end(), [](const CheckItem& c) { return !c.pass; });
  CHECK(failed == 1);
  for (const CheckItem& c : one.items)
    if (c.id == "flow.chart_jacobian") CHECK(c.tolerance == 1e-300);
}
