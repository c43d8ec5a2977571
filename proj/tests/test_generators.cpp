#include "doctest.h"

#include "fbsel/generators.hpp"
#include "fbsel/graphs.hpp"
#include "fbsel/io.hpp"

using namespace fbsel;

TEST_CASE("rng draws are stable across platforms") {
  SeededRng a(42), b(42);
  for (int k = 0; k < 100; ++k) {
    const int x = a.uniform_int(-3, 9);
    CHECK(x == b.uniform_int(-3, 9));
    CHECK(x >= -3);
    CHECK(x <= 9);
    const double u = a.uniform01();
    CHECK(u == b.uniform01());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(SeededRng(7).uniform_int(0, 1000000) == SeededRng(7).uniform_int(0, 1000000));
  CHECK_THROWS_AS(a.uniform_int(2, 1), PreconditionError);
}

TEST_CASE("line generator is seed-deterministic") {
  LineParams params;
  params.seed = 99;
  const std::string first = emit_system(generate_line(params));
  CHECK(first == emit_system(generate_line(params)));
  params.seed = 100;
  CHECK(first != emit_system(generate_line(params)));
}

TEST_CASE("line generator honours its shape parameters") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    LineParams params;
    params.seed = seed;
    params.scc_count = 1 + static_cast<int>(seed % 8);
    params.scc_size_min = 1;
    params.scc_size_max = 3;
    params.inputs = 2;
    params.outputs = 3;
    params.perfect_matching = seed % 2 == 0;
    params.shortcut_density = seed % 3 == 0 ? 0.5 : 0.0;
    const Instance inst = generate_line(params);
    const Condensation c = condense(inst.sys);
    CHECK(c.size() == params.scc_count);
    CHECK(inst.sys.n >= params.scc_count);
    CHECK(inst.sys.n <= 3 * params.scc_count);
    CHECK(inst.sys.m == 2);
    CHECK(inst.sys.p == 3);
    CHECK(has_line_spanning_path(c).has_value());
    if (params.shortcut_density == 0.0) CHECK(is_line_dag(c));
    CHECK(has_perfect_matching(state_bipartite(inst.sys)) == params.perfect_matching);
    CHECK_FALSE(c.input_incidence.front().empty());
    CHECK_FALSE(c.output_incidence.back().empty());
    for (int i = 0; i < inst.sys.m; ++i)
      for (int j = 0; j < inst.sys.p; ++j) {
        const Cost w = inst.costs.at(i, j);
        CHECK(w >= Cost(1));
        CHECK(w <= Cost(100));
      }
  }
}

TEST_CASE("forbidden links keep one covering link finite") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    LineParams params;
    params.seed = seed;
    params.forbidden_density = 1.0;
    const Instance inst = generate_line(params);
    CHECK(FeedbackPattern::full(inst.costs).size() == 1);
  }
}

TEST_CASE("single-input generator shape") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SingleInputParams params;
    params.seed = seed;
    params.scc_count = 1 + static_cast<int>(seed % 9);
    params.outputs = 1 + static_cast<int>(seed % 6);
    const Instance inst = generate_single_input(params);
    const Condensation c = condense(inst.sys);
    CHECK(c.size() == params.scc_count);
    CHECK(inst.sys.m == 1);
    CHECK(has_perfect_matching(state_bipartite(inst.sys)));
    int sources = 0;
    for (int k = 0; k < c.size(); ++k) {
      sources += c.non_top_linked[k];
      if (c.non_bottom_linked[k]) CHECK_FALSE(c.output_incidence[k].empty());
    }
    CHECK(sources == 1);
    CHECK(c.non_top_linked[0]);
    CHECK(c.input_incidence[0] == std::vector<int>{0});
  }
}

TEST_CASE("star-shaped single-input systems") {
  SingleInputParams params;
  params.scc_count = 9;
  params.star = true;
  params.seed = 5;
  const Condensation c = condense(generate_single_input(params).sys);
  int sinks = 0;
  for (int k = 0; k < c.size(); ++k) sinks += c.non_bottom_linked[k];
  CHECK(sinks == 8);
}

TEST_CASE("generators reject bad parameters") {
  LineParams line;
  line.scc_count = 0;
  CHECK_THROWS_AS(generate_line(line), PreconditionError);
  line.scc_count = 2;
  line.cost_min = 5;
  line.cost_max = 4;
  CHECK_THROWS_AS(generate_line(line), PreconditionError);
  SingleInputParams single;
  single.outputs = 0;
  CHECK_THROWS_AS(generate_single_input(single), PreconditionError);
}
