#include "fbsel/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fbsel {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* field) {
  auto it = doc.find(field);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + field + "'");
  return *it;
}

int require_int(const json& doc, const char* field) {
  const json& v = require(doc, field);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + field + "' must be an integer");
  return v.get<int>();
}

std::vector<Entry> parse_edges(const json& doc, const char* field) {
  const json& list = require(doc, field);
  if (!list.is_array()) throw ParseError(std::string("field '") + field + "' must be an array of index pairs");
  std::vector<Entry> edges;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const json& pair = list[k];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw ParseError(std::string("field '") + field + "' entry " + std::to_string(k + 1) +
                       " must be a pair of integers");
    }
    edges.push_back({pair[0].get<int>() - 1, pair[1].get<int>() - 1});
  }
  return edges;
}

Cost parse_cost(const json& v, const std::string& where) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return Cost::infinite();
    throw ParseError(where + ": the only string allowed is \"inf\"");
  }
  if (!v.is_number()) throw ParseError(where + " must be a number or \"inf\"");
  double x = v.get<double>();
  if (!(x >= 0.0)) throw ParseError(where + " must be nonnegative");
  return Cost(x);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("not valid JSON: ") + e.what());
  }
}

void write_pairs(std::ostringstream& os, const std::vector<Entry>& edges) {
  os << '[';
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k) os << ", ";
    os << '[' << edges[k].row + 1 << ", " << edges[k].col + 1 << ']';
  }
  os << ']';
}

std::string cost_json(Cost c) { return c.is_infinite() ? "\"inf\"" : c.to_string(); }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Instance parse_system(std::string_view text, std::vector<std::string>* warnings) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("system file must be a JSON object");

  StructuredSystem sys;
  sys.n = require_int(doc, "n");
  sys.m = require_int(doc, "m");
  sys.p = require_int(doc, "p");
  sys.a_edges = parse_edges(doc, "a_edges");
  sys.b_edges = parse_edges(doc, "b_edges");
  sys.c_edges = parse_edges(doc, "c_edges");

  const json& cost = require(doc, "cost");
  if (!cost.is_array()) throw ParseError("field 'cost' must be an array of rows");
  if (static_cast<int>(cost.size()) != sys.m) {
    throw ParseError("field 'cost' has " + std::to_string(cost.size()) + " rows, expected m=" +
                     std::to_string(sys.m));
  }
  CostMatrix costs(sys.m, sys.p);
  for (int i = 0; i < sys.m; ++i) {
    const json& row = cost[i];
    if (!row.is_array() || static_cast<int>(row.size()) != sys.p) {
      throw ParseError("field 'cost' row " + std::to_string(i + 1) + " must have p=" +
                       std::to_string(sys.p) + " entries");
    }
    for (int j = 0; j < sys.p; ++j) {
      costs.set(i, j, parse_cost(row[j], "field 'cost' entry (" + std::to_string(i + 1) + ", " +
                                            std::to_string(j + 1) + ")"));
    }
  }

  try {
    return {make_system(std::move(sys), warnings), std::move(costs)};
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

std::string emit_system(const Instance& inst) {
  const StructuredSystem& sys = inst.sys;
  check_dimensions(sys, inst.costs);
  std::ostringstream os;
  os << "{\n";
  os << "  \"n\": " << sys.n << ",\n";
  os << "  \"m\": " << sys.m << ",\n";
  os << "  \"p\": " << sys.p << ",\n";
  os << "  \"a_edges\": ";
  write_pairs(os, sys.a_edges);
  os << ",\n  \"b_edges\": ";
  write_pairs(os, sys.b_edges);
  os << ",\n  \"c_edges\": ";
  write_pairs(os, sys.c_edges);
  os << ",\n  \"cost\": [";
  for (int i = 0; i < sys.m; ++i) {
    os << (i ? ",\n    [" : "\n    [");
    for (int j = 0; j < sys.p; ++j) os << (j ? ", " : "") << cost_json(inst.costs.at(i, j));
    os << ']';
  }
  os << (sys.m ? "\n  ]\n" : "]\n");
  os << "}\n";
  return os.str();
}

Instance load_system(const std::string& path, std::vector<std::string>* warnings) {
  try {
    return parse_system(read_file(path), warnings);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

SetCoverInstance parse_set_cover(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("set cover file must be a JSON object");
  SetCoverInstance inst;
  inst.universe_size = require_int(doc, "universe_size");
  const json& sets = require(doc, "sets");
  if (!sets.is_array()) throw ParseError("field 'sets' must be an array of arrays");
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (!sets[s].is_array()) throw ParseError("field 'sets' entry " + std::to_string(s + 1) + " must be an array");
    std::vector<int> members;
    for (const json& e : sets[s]) {
      if (!e.is_number_integer()) {
        throw ParseError("field 'sets' entry " + std::to_string(s + 1) + " must hold integers");
      }
      members.push_back(e.get<int>() - 1);
    }
    inst.sets.push_back(std::move(members));
  }
  const json& weights = require(doc, "weights");
  if (!weights.is_array()) throw ParseError("field 'weights' must be an array");
  for (std::size_t s = 0; s < weights.size(); ++s)
    inst.weights.push_back(parse_cost(weights[s], "field 'weights' entry " + std::to_string(s + 1)));
  try {
    validate(inst);
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
  return inst;
}

std::string emit_set_cover(const SetCoverInstance& inst) {
  std::ostringstream os;
  os << "{\n  \"universe_size\": " << inst.universe_size << ",\n  \"sets\": [";
  for (std::size_t s = 0; s < inst.sets.size(); ++s) {
    os << (s ? ", [" : "[");
    for (std::size_t k = 0; k < inst.sets[s].size(); ++k) os << (k ? ", " : "") << inst.sets[s][k] + 1;
    os << ']';
  }
  os << "],\n  \"weights\": [";
  for (std::size_t s = 0; s < inst.weights.size(); ++s) os << (s ? ", " : "") << cost_json(inst.weights[s]);
  os << "]\n}\n";
  return os.str();
}

SetCoverInstance load_set_cover(const std::string& path) {
  try {
    return parse_set_cover(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

FeedbackPattern parse_links(std::string_view text) {
  std::vector<Link> links;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto number = [&](std::string_view s, std::string_view token) {
    s = trim(s);
    int value = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size() || value < 1) {
      throw ParseError("feedback link '" + std::string(token) +
                       "' must be input:output with 1-based indices");
    }
    return value - 1;
  };
  if (trim(text).empty()) return {};
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = trim(text.substr(pos, comma - pos));
    std::size_t colon = token.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("feedback link '" + std::string(token) + "' must be input:output");
    }
    links.push_back({number(token.substr(0, colon), token), number(token.substr(colon + 1), token)});
    pos = comma + 1;
  }
  return FeedbackPattern(std::move(links));
}

std::string format_links(const FeedbackPattern& k) {
  std::string out;
  for (const Link& l : k.links()) {
    if (!out.empty()) out += ',';
    out += std::to_string(l.input + 1) + ":" + std::to_string(l.output + 1);
  }
  return out;
}

}  // namespace fbsel
