#include <doctest.h>

#include "dk/check.hpp"

using namespace dk;

TEST_CASE("the full randomized suite passes at a fresh seed") {
  auto results = run_checks("all", 0x5eedf00d, 30);
  CHECK(results.size() >= 40);
  for (const auto& r : results) {
    INFO(r.suite << "." << r.name << ": " << r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("suite filters select their module") {
  auto norms_only = run_checks("norms", 3, 5);
  CHECK_FALSE(norms_only.empty());
  for (const auto& r : norms_only) CHECK(r.suite == "norms");
  CHECK_THROWS_AS(run_checks("nope", 3, 5), precondition_error);
}
