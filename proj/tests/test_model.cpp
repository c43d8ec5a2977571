#include "doctest.h"

#include "fbsel/generators.hpp"
#include "fbsel/model.hpp"
#include "oracles.hpp"

using namespace fbsel;

TEST_CASE("cost arithmetic saturates at infinity") {
  CHECK((Cost(2) + Cost(3)) == Cost(5));
  CHECK((Cost(2) + Cost::infinite()).is_infinite());
  CHECK(Cost(1) < Cost::infinite());
  CHECK(Cost::zero() == Cost(0));
  CHECK_THROWS_AS(Cost(-1), std::invalid_argument);
  CHECK(Cost::infinite().to_string() == "inf");
  CHECK(Cost(5).to_string() == "5");
  CHECK(Cost(2.5).to_string() == "2.5");
  CHECK(Cost(4).scaled(2.5) == Cost(10));
  CHECK(Cost::infinite().scaled(3).is_infinite());
}

TEST_CASE("validate reports range violations and duplicates") {
  StructuredSystem sys{2, 1, 1, {{0, 1}, {0, 1}}, {{0, 0}}, {{0, 1}}};
  ValidationReport r = validate(sys);
  CHECK(r.ok());
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("a_edges") != std::string::npos);

  sys.a_edges.push_back({-1, 0});
  sys.b_edges.push_back({0, 1});
  sys.c_edges.push_back({1, 0});
  r = validate(sys);
  CHECK_FALSE(r.ok());
  CHECK(r.violations.size() == 3);
  CHECK_THROWS_AS(make_system(sys), DimensionError);

  CHECK_FALSE(validate(StructuredSystem{0, 0, 0, {}, {}, {}}).ok());
}

TEST_CASE("make_system canonicalizes edge order") {
  StructuredSystem sys{3, 1, 1, {{2, 1}, {0, 0}, {2, 1}, {1, 0}}, {{0, 0}}, {{0, 2}}};
  std::vector<std::string> warnings;
  const StructuredSystem c = make_system(sys, &warnings);
  CHECK(warnings.size() == 1);
  CHECK(c.a_edges == std::vector<Entry>{{0, 0}, {1, 0}, {2, 1}});
  CHECK(canonicalize(c) == c);
}

TEST_CASE("cost matrix shape checks") {
  CostMatrix p(2, 3, Cost(1));
  p.set(1, 2, Cost::infinite());
  CHECK(p.at(1, 2).is_infinite());
  CHECK_THROWS_AS(p.at(2, 0), DimensionError);
  CHECK_THROWS_AS(p.set(0, 3, Cost(1)), DimensionError);
  CHECK_THROWS_AS(CostMatrix::from_rows({{Cost(1), Cost(2)}, {Cost(1)}}), DimensionError);
  CHECK(p.scaled(3).at(0, 0) == Cost(3));
  CHECK(p.scaled(3).at(1, 2).is_infinite());

  StructuredSystem sys{1, 2, 2, {}, {}, {}};
  CHECK_THROWS_AS(check_dimensions(sys, p), DimensionError);
  CHECK_NOTHROW(check_dimensions(sys, CostMatrix(2, 2)));
}

TEST_CASE("feedback patterns are sorted sets") {
  FeedbackPattern k({{1, 0}, {0, 2}, {1, 0}});
  CHECK(k.size() == 2);
  CHECK(k.links()[0] == Link{0, 2});
  CHECK(k.contains({1, 0}));
  k.insert({0, 0});
  CHECK(k.links()[0] == Link{0, 0});
  CHECK(FeedbackPattern({{0, 0}}).is_subset_of(k));
  CHECK_FALSE(k.is_subset_of(FeedbackPattern({{0, 0}})));
  CHECK(k.united(FeedbackPattern({{2, 2}})).size() == 4);

  CostMatrix p(2, 2, Cost(1));
  p.set(0, 1, Cost::infinite());
  CHECK(FeedbackPattern::full(p).size() == 3);
  CHECK_THROWS_AS(check_pattern(FeedbackPattern({{2, 0}}), 2, 2), DimensionError);
}

TEST_CASE("cost_of is additive, monotone and saturating") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SeededRng rng(seed);
    const int m = rng.uniform_int(1, 4), p = rng.uniform_int(1, 4);
    CostMatrix costs(m, p);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < p; ++j)
        costs.set(i, j, rng.chance(0.2) ? Cost::infinite() : Cost(rng.uniform_int(0, 50)));
    const FeedbackPattern small = oracle::random_pattern(m, p, 0.3, seed);
    const FeedbackPattern big = small.united(oracle::random_pattern(m, p, 0.3, seed + 1000));
    CHECK(cost_of(small, costs) <= cost_of(big, costs));
    Cost manual;
    bool forbidden = false;
    for (const Link& l : big.links()) {
      manual += costs.at(l.input, l.output);
      forbidden = forbidden || costs.at(l.input, l.output).is_infinite();
    }
    CHECK(cost_of(big, costs) == manual);
    CHECK(cost_of(big, costs).is_infinite() == forbidden);
  }
  CHECK(cost_of(FeedbackPattern(), CostMatrix(2, 2)) == Cost::zero());
}

TEST_CASE("set cover validation") {
  CHECK_NOTHROW(validate(SetCoverInstance{3, {{0, 1}, {2}}, {Cost(1), Cost(2)}}));
  CHECK_THROWS_AS(validate(SetCoverInstance{3, {{0, 1}}, {Cost(1)}}), DimensionError);
  CHECK_THROWS_AS(validate(SetCoverInstance{2, {{0, 1}}, {}}), DimensionError);
  CHECK_THROWS_AS(validate(SetCoverInstance{2, {{0, 1}, {}}, {Cost(1), Cost(1)}}), DimensionError);
  CHECK_THROWS_AS(validate(SetCoverInstance{2, {{0, 5}, {1}}, {Cost(1), Cost(1)}}), DimensionError);
}
