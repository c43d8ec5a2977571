#include "doctest.h"

#include "fbsel/generators.hpp"
#include "fbsel/sfm.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fbsel;

TEST_CASE("reduced set cover system without feedback") {
  const Instance inst = load_fixture("cover_reduced.json");
  const SfmVerdict v = check_no_sfm(inst.sys, FeedbackPattern());
  CHECK(v.uncovered_states == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(v.condition_b);
  CHECK_FALSE(v.feasible());
}

TEST_CASE("one set leaves the other elements uncovered") {
  const Instance inst = load_fixture("cover_reduced.json");
  const SfmVerdict v = check_no_sfm(inst.sys, FeedbackPattern({{0, 0}}));
  CHECK(v.uncovered_states == std::vector<int>{2, 3, 4});
  CHECK_FALSE(v.feasible());
  CHECK(check_no_sfm(inst.sys, FeedbackPattern({{0, 0}, {0, 2}})).feasible());
  CHECK_FALSE(check_no_sfm(inst.sys, FeedbackPattern({{0, 1}, {0, 2}})).feasible());
  CHECK(check_no_sfm(inst.sys, FeedbackPattern({{0, 0}, {0, 1}, {0, 2}})).feasible());
  CHECK_FALSE(check_no_sfm(inst.sys, FeedbackPattern({{0, 0}, {0, 1}})).feasible());
}

TEST_CASE("condition b needs the feedback to close a cycle") {
  // x1 -> x2 with no self-loops: B(A) has no perfect matching.
  const StructuredSystem sys = make_system({2, 1, 1, {{1, 0}}, {{0, 0}}, {{0, 1}}});
  CHECK_FALSE(check_condition_b(sys, FeedbackPattern()));
  CHECK(check_condition_b(sys, FeedbackPattern({{0, 0}})));
  CHECK(check_condition_a(sys, FeedbackPattern({{0, 0}})).empty());
}

TEST_CASE("worked example: the DP answer is feasible, y1 alone is not") {
  const Instance inst = load_fixture("worked_example.json");
  CHECK(check_no_sfm(inst.sys, FeedbackPattern({{1, 2}})).feasible());
  const SfmVerdict v = check_no_sfm(inst.sys, FeedbackPattern({{0, 0}}));
  CHECK(v.uncovered_states == std::vector<int>{3, 4, 5, 6, 7, 8, 9, 10});
}

TEST_CASE("verdicts agree with reachability and cycle-cover oracles") {
  int feasible = 0, b_fail = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SeededRng rng(seed);
    const int n = rng.uniform_int(1, 5), m = rng.uniform_int(0, 2), p = rng.uniform_int(0, 2);
    const StructuredSystem sys = make_system(oracle::random_system({n, m, p, 0.3, 0.5, 0.5}, seed));
    const FeedbackPattern k = oracle::random_pattern(m, p, 0.5, seed * 31 + 1);
    const SfmVerdict v = check_no_sfm(sys, k);
    CHECK(v.condition_a() == oracle::condition_a(sys, k));
    CHECK(v.condition_b == oracle::disjoint_cycle_cover(sys, k));
    CHECK(v.condition_b == oracle::condition_b(sys, k));
    feasible += v.feasible();
    b_fail += !v.condition_b;
  }
  CHECK(feasible > 10);
  CHECK(b_fail > 10);
}

TEST_CASE("adding links never creates fixed modes") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const StructuredSystem sys = make_system(oracle::random_system({4, 2, 2, 0.3, 0.4, 0.4}, seed));
    const FeedbackPattern k = oracle::random_pattern(2, 2, 0.4, seed + 11);
    const FeedbackPattern bigger = k.united(oracle::random_pattern(2, 2, 0.4, seed + 23));
    const SfmVerdict small = check_no_sfm(sys, k);
    const SfmVerdict big = check_no_sfm(sys, bigger);
    if (small.condition_a()) CHECK(big.condition_a());
    if (small.condition_b) CHECK(big.condition_b);
    CHECK(big.uncovered_states.size() <= small.uncovered_states.size());
  }
}
