#include <doctest.h>

#include "core/decay.hpp"
#include "core/error.hpp"

using namespace ugfpc;

TEST_CASE("first step of the decay statistic is exact") {
  // Length-1 paths are the root edge in its two orientations, each with
  // dim Z = l < m, so X_1 = 2 (d^(m-l) - 1) in every trial.
  auto t = decay_simulation(3, 1, 3, 4, 500, 9);
  REQUIRE(t.steps.size() == 4);
  CHECK(t.steps[0].mean == 16);
  CHECK(t.steps[0].min == 16);
  CHECK(t.steps[0].max == 16);
  CHECK(t.steps[0].standard_error == 0.0);
}

TEST_CASE("decay trace is reproducible and decreasing in the long run") {
  auto a = decay_simulation(3, 1, 3, 6, 2000, 1);
  auto b = decay_simulation(3, 1, 3, 6, 2000, 1);
  for (std::size_t i = 0; i < a.steps.size(); ++i) CHECK(a.steps[i].mean == b.steps[i].mean);
  CHECK(a.steps.back().mean < a.steps.front().mean);
}

TEST_CASE("decay arguments are checked") {
  CHECK_THROWS_AS(decay_simulation(1, 1, 3, 2, 10, 0), Error);
  CHECK_THROWS_AS(decay_simulation(3, 1, 3, 0, 10, 0), Error);
  CHECK_THROWS_AS(decay_simulation(20, 1, 17, 40, 10, 0), Error);
}
