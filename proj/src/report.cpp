#include "fbsel/report.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

#include "json.hpp"

namespace fbsel {

using ojson = nlohmann::ordered_json;

namespace {

ojson cost_json(Cost c) {
  if (c.is_infinite()) return "inf";
  const double v = c.value();
  if (v == std::floor(v) && v < 9007199254740992.0) return static_cast<std::int64_t>(v);
  return v;
}

std::string link_text(Link l) { return "(" + std::to_string(l.input + 1) + "," + std::to_string(l.output + 1) + ")"; }

}  // namespace

RunReport make_report(std::string command, const Instance& inst, const Solution& solution) {
  RunReport r;
  r.command = std::move(command);
  r.method = solution.method;
  r.solved = solution.solved;
  r.links = solution.pattern;
  r.cost = solution.solved ? cost_of(r.links, inst.costs) : Cost::infinite();
  r.verdict = check_no_sfm(inst.sys, r.links);
  r.condition_a_only = solution.condition_a_only;
  r.note = solution.note;
  r.dp = solution.dp;
  r.matching = solution.matching;
  r.greedy = solution.greedy;
  return r;
}

RunReport make_check_report(const Instance& inst, const FeedbackPattern& pattern) {
  check_pattern(pattern, inst.sys.m, inst.sys.p);
  RunReport r;
  r.command = "check-sfm";
  r.links = pattern;
  r.cost = cost_of(pattern, inst.costs);
  r.verdict = check_no_sfm(inst.sys, pattern);
  return r;
}

std::string format_text(const RunReport& r) {
  std::ostringstream os;
  os << "command: " << r.command << '\n';
  if (r.method) os << "method: " << to_string(*r.method) << '\n';
  os << "links:";
  if (r.links.empty()) os << " none";
  for (const Link& l : r.links.links()) os << ' ' << link_text(l);
  os << '\n';
  os << "cost: " << r.cost.to_string() << '\n';
  os << "verdict: " << (r.feasible() ? "feasible" : "infeasible") << '\n';
  os << "condition a: ";
  if (r.verdict.condition_a()) {
    os << "pass\n";
  } else {
    os << "fail, uncovered";
    for (int x : r.verdict.uncovered_states) os << " x" << x + 1;
    os << '\n';
  }
  os << "condition b: " << (r.verdict.condition_b ? "pass" : "fail") << '\n';
  if (r.condition_a_only) os << "scope: condition a only\n";
  if (!r.note.empty()) os << "note: " << r.note << '\n';

  if (r.dp) {
    os << "dp table:\n";
    for (int k = 0; k <= r.dp->stages(); ++k) {
      os << "  W[" << k << "] = " << r.dp->w[k].to_string();
      if (k > 0 && r.dp->choice[k]) {
        const DpStage& s = *r.dp->choice[k];
        os << "  via " << link_text(s.edge) << " t=" << s.first_stage;
      }
      os << '\n';
    }
  }
  if (r.matching) {
    os << "matching (cost " << r.matching->cost.to_string() << "):";
    for (const auto& [left, right] : r.matching->pairs) os << ' ' << left << '-' << right;
    os << '\n';
  }
  if (r.greedy) {
    os << "greedy sinks:";
    for (int c : r.greedy->sink_sccs) os << " C" << c + 1;
    os << '\n';
    for (std::size_t s = 0; s < r.greedy->steps.size(); ++s) {
      const GreedyStep& step = r.greedy->steps[s];
      os << "  step " << s + 1 << ": y" << step.output + 1 << " weight " << step.weight.to_string()
         << " covers " << step.newly_covered << " new\n";
    }
  }
  if (r.elapsed_ms) os << "elapsed_ms: " << *r.elapsed_ms << '\n';
  return os.str();
}

std::string format_structured(const RunReport& r) {
  ojson doc;
  doc["command"] = r.command;
  if (r.method) doc["method"] = std::string(to_string(*r.method));
  doc["solved"] = r.solved;
  doc["feasible"] = r.feasible();
  ojson links = ojson::array();
  for (const Link& l : r.links.links()) links.push_back({l.input + 1, l.output + 1});
  doc["links"] = std::move(links);
  doc["cost"] = cost_json(r.cost);
  doc["condition_a"] = r.verdict.condition_a();
  ojson uncovered = ojson::array();
  for (int x : r.verdict.uncovered_states) uncovered.push_back(x + 1);
  doc["uncovered_states"] = std::move(uncovered);
  doc["condition_b"] = r.verdict.condition_b;
  doc["condition_a_only"] = r.condition_a_only;
  if (!r.note.empty()) doc["note"] = r.note;

  ojson certs = ojson::object();
  if (r.dp) {
    ojson w = ojson::array();
    ojson stages = ojson::array();
    for (int k = 0; k <= r.dp->stages(); ++k) {
      w.push_back(cost_json(r.dp->w[k]));
      if (k == 0) continue;
      ojson stage;
      stage["k"] = k;
      if (r.dp->choice[k]) {
        const DpStage& s = *r.dp->choice[k];
        stage["link"] = {s.edge.input + 1, s.edge.output + 1};
        stage["first_stage"] = s.first_stage;
      } else {
        stage["link"] = nullptr;
      }
      stages.push_back(std::move(stage));
    }
    certs["dp"] = {{"w", std::move(w)}, {"stages", std::move(stages)}};
  }
  if (r.matching) {
    ojson pairs = ojson::array();
    for (const auto& [left, right] : r.matching->pairs) pairs.push_back({left, right});
    certs["matching"] = {{"cost", cost_json(r.matching->cost)}, {"pairs", std::move(pairs)}};
  }
  if (r.greedy) {
    ojson sinks = ojson::array();
    for (int c : r.greedy->sink_sccs) sinks.push_back(c + 1);
    ojson steps = ojson::array();
    for (const GreedyStep& s : r.greedy->steps)
      steps.push_back({{"output", s.output + 1}, {"weight", cost_json(s.weight)}, {"newly_covered", s.newly_covered}});
    certs["greedy"] = {{"sink_sccs", std::move(sinks)}, {"steps", std::move(steps)}};
  }
  if (!certs.empty()) doc["certificates"] = std::move(certs);
  if (r.elapsed_ms) doc["elapsed_ms"] = *r.elapsed_ms;
  return doc.dump(2) + "\n";
}

}  // namespace fbsel
