#include "doctest.h"

#include "fbsel/generators.hpp"
#include "fbsel/io.hpp"
#include "fixtures.hpp"

using namespace fbsel;

namespace {

std::string message_of(std::string_view text) {
  try {
    parse_system(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("worked example file loads with 1-based indices") {
  const Instance inst = load_fixture("worked_example.json");
  CHECK(inst.sys.n == 11);
  CHECK(inst.sys.m == 4);
  CHECK(inst.sys.p == 3);
  CHECK(inst.sys.b_edges.front() == Entry{0, 0});
  CHECK(inst.costs.at(1, 2) == Cost(5));
  CHECK(inst.costs.at(0, 2) == Cost(100));
}

TEST_CASE("parse errors name the offending field") {
  CHECK(message_of("{\"n\": 1}").find("'m'") != std::string::npos);
  CHECK(message_of("[1, 2]").find("JSON object") != std::string::npos);
  CHECK(message_of("{").find("not valid JSON") != std::string::npos);

  const std::string base = R"({"n": 2, "m": 1, "p": 1, "b_edges": [[1, 1]], "c_edges": [[1, 2]], )";
  CHECK(message_of(base + R"("a_edges": [[1]], "cost": [[1]]})").find("'a_edges' entry 1") != std::string::npos);
  CHECK(message_of(base + R"("a_edges": [[3, 1]], "cost": [[1]]})").find("a_edges") != std::string::npos);
  CHECK(message_of(base + R"("a_edges": [], "cost": [[1, 2]]})").find("'cost' row 1") != std::string::npos);
  CHECK(message_of(base + R"("a_edges": [], "cost": [["x"]]})").find("\"inf\"") != std::string::npos);
  CHECK(message_of(base + R"("a_edges": [], "cost": [[-3]]})").find("nonnegative") != std::string::npos);
  CHECK(message_of(base + R"("a_edges": [], "cost": [[1]]})").empty());
}

TEST_CASE("duplicate edges become warnings") {
  std::vector<std::string> warnings;
  const Instance inst = parse_system(
      R"({"n": 1, "m": 1, "p": 1, "a_edges": [[1, 1], [1, 1]], "b_edges": [[1, 1]],
          "c_edges": [[1, 1]], "cost": [["inf"]]})",
      &warnings);
  CHECK(warnings.size() == 1);
  CHECK(inst.sys.a_edges.size() == 1);
  CHECK(inst.costs.at(0, 0).is_infinite());
}

TEST_CASE("emit then parse is the identity on generated systems") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    LineParams params;
    params.seed = seed;
    params.scc_count = 1 + static_cast<int>(seed % 6);
    params.perfect_matching = seed % 2 == 0;
    params.forbidden_density = 0.2;
    params.shortcut_density = 0.3;
    const Instance inst = generate_line(params);
    const std::string text = emit_system(inst);
    CHECK(parse_system(text) == inst);
    CHECK(emit_system(parse_system(text)) == text);
  }
}

TEST_CASE("set cover files round-trip") {
  const SetCoverInstance inst = load_set_cover(data_path("cover_example.json"));
  CHECK(inst.universe_size == 5);
  CHECK(inst.sets == std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3, 4}});
  CHECK(inst.weights == std::vector<Cost>{Cost(2), Cost(3), Cost(4)});
  CHECK(parse_set_cover(emit_set_cover(inst)) == inst);
  CHECK_THROWS_AS(parse_set_cover(R"({"universe_size": 3, "sets": [[1, 2]], "weights": [1]})"), ParseError);
}

TEST_CASE("feedback link lists") {
  CHECK(parse_links("").empty());
  CHECK(parse_links("  ").empty());
  const FeedbackPattern k = parse_links("2:3, 1:1");
  CHECK(k == FeedbackPattern({{0, 0}, {1, 2}}));
  CHECK(format_links(k) == "1:1,2:3");
  CHECK_THROWS_AS(parse_links("1"), ParseError);
  CHECK_THROWS_AS(parse_links("0:1"), ParseError);
  CHECK_THROWS_AS(parse_links("1:x"), ParseError);
  CHECK_THROWS_AS(parse_links("1:1,"), ParseError);
}

TEST_CASE("missing files are reported") {
  CHECK_THROWS_AS(load_system(data_path("no_such_file.json")), ParseError);
}
