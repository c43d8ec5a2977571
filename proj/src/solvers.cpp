#include "fbsel/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <tuple>

#include "fbsel/sfm.hpp"

namespace fbsel {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Dp: return "dp";
    case Method::TwoStage: return "two-stage";
    case Method::Greedy: return "greedy";
    case Method::Exact: return "exact";
    case Method::Reduction: return "reduction";
  }
  return "unknown";
}

namespace {

Solution infeasible(Method method, std::string note) {
  Solution s;
  s.method = method;
  s.note = std::move(note);
  return s;
}

std::string scc_name(int k) { return "C" + std::to_string(k + 1); }

}  // namespace

bool DpTable::covers(Link link, int k) const {
  int t = first_stage.at(link.input);
  int s = last_stage.at(link.output);
  return t != 0 && t <= k && s >= k;
}

DpTable dp_table(const Condensation& cond, const CostMatrix& costs) {
  const int stages = cond.size();
  const int m = costs.rows(), p = costs.cols();

  DpTable table;
  table.first_stage.assign(m, 0);
  table.last_stage.assign(p, 0);
  for (int k = stages; k >= 1; --k)
    for (int i : cond.input_incidence[k - 1]) {
      if (i >= m) throw DimensionError("input index exceeds cost matrix rows");
      table.first_stage[i] = k;
    }
  for (int k = 1; k <= stages; ++k)
    for (int j : cond.output_incidence[k - 1]) {
      if (j >= p) throw DimensionError("output index exceeds cost matrix columns");
      table.last_stage[j] = k;
    }

  // Inputs enter the active set at their first stage and stay; outputs
  // leave once the stage passes the last SCC they sense.
  std::vector<int> input_order(m), output_order(p);
  std::iota(input_order.begin(), input_order.end(), 0);
  std::iota(output_order.begin(), output_order.end(), 0);
  std::stable_sort(input_order.begin(), input_order.end(),
                   [&](int a, int b) { return table.first_stage[a] < table.first_stage[b]; });
  auto next_input = std::find_if(input_order.begin(), input_order.end(),
                                 [&](int i) { return table.first_stage[i] > 0; });
  std::vector<int> active_inputs;
  std::vector<int> active_outputs;
  for (int j : output_order)
    if (table.last_stage[j] >= 1) active_outputs.push_back(j);

  table.w.assign(stages + 1, Cost::infinite());
  table.choice.assign(stages + 1, std::nullopt);
  table.w[0] = Cost::zero();

  for (int k = 1; k <= stages; ++k) {
    while (next_input != input_order.end() && table.first_stage[*next_input] == k) {
      active_inputs.push_back(*next_input);
      ++next_input;
    }
    std::erase_if(active_outputs, [&](int j) { return table.last_stage[j] < k; });

    Cost best = Cost::infinite();
    std::optional<DpStage> arg;
    for (int i : active_inputs) {
      const int t = table.first_stage[i];
      const Cost before = table.w[t - 1];
      if (before.is_infinite()) continue;
      for (int j : active_outputs) {
        const Cost price = costs.at(i, j);
        if (price.is_infinite()) continue;
        const Cost total = price + before;
        // Ties: smaller t, then lexicographically smaller (input, output).
        bool better = !arg || total < best ||
                      (total == best && std::tuple{t, i, j} < std::tuple{arg->first_stage,
                                                                         arg->edge.input,
                                                                         arg->edge.output});
        if (better) {
          best = total;
          arg = DpStage{{i, j}, t, t - 1};
        }
      }
    }
    table.w[k] = best;
    table.choice[k] = arg;
  }
  return table;
}

Solution dp_cover(const Condensation& cond, const CostMatrix& costs) {
  if (!has_line_spanning_path(cond)) {
    std::ostringstream os;
    os << "SCC condensation is not a line graph and has no spanning line:";
    for (auto [a, b] : missing_line_links(cond)) os << " missing " << scc_name(a) << "->" << scc_name(b) << ";";
    os << " DAG edges:";
    for (auto [a, b] : cond.dag_edges) os << " " << scc_name(a) << "->" << scc_name(b);
    throw PreconditionError(os.str());
  }

  DpTable table = dp_table(cond, costs);
  const int stages = table.stages();
  Solution s;
  s.method = Method::Dp;
  if (table.w[stages].is_infinite()) {
    s.note = "condition (a) cannot be met: no finite-cost feedback link covers every SCC";
    s.dp = std::move(table);
    return s;
  }
  for (int k = stages; k > 0;) {
    const DpStage& st = *table.choice[k];
    s.pattern.insert(st.edge);
    k = st.predecessor;
  }
  s.cost = cost_of(s.pattern, costs);
  s.solved = true;
  s.dp = std::move(table);
  return s;
}

Solution solve_dp(const StructuredSystem& sys, const CostMatrix& costs) {
  check_dimensions(sys, costs);
  Solution s = dp_cover(condense(sys), costs);
  if (!has_perfect_matching(state_bipartite(sys))) {
    s.condition_a_only = true;
    if (s.note.empty()) s.note = "B(A) has no perfect matching: only condition (a) is guaranteed";
  }
  return s;
}

Solution min_cost_condition_b(const StructuredSystem& sys, const CostMatrix& costs) {
  check_dimensions(sys, costs);
  const BipartiteGraph g = closed_loop_bipartite(sys, FeedbackPattern::full(costs), &costs);
  std::optional<Matching> matching = min_cost_perfect_matching(g);
  if (!matching) {
    return infeasible(Method::TwoStage,
                      "condition (b) cannot be met: no perfect matching even with every allowed "
                      "feedback link");
  }
  Solution s;
  s.method = Method::TwoStage;
  MatchingCertificate cert;
  cert.cost = matching->cost;
  const int u0 = sys.n, y0 = sys.n + sys.m;
  for (int e : matching->edges) {
    const BipartiteEdge& be = g.edges[e];
    cert.pairs.push_back({g.left[be.left], g.right[be.right]});
    if (be.kind == BipartiteKind::Feedback) s.pattern.insert({be.left - u0, be.right - y0});
  }
  s.cost = cost_of(s.pattern, costs);
  s.solved = true;
  s.matching = std::move(cert);
  return s;
}

Solution two_stage(const StructuredSystem& sys, const CostMatrix& costs) {
  Solution a = solve_dp(sys, costs);
  if (!a.solved) {
    Solution out = infeasible(Method::TwoStage, a.note);
    out.dp = std::move(a.dp);
    return out;
  }
  Solution b = min_cost_condition_b(sys, costs);
  if (!b.solved) {
    Solution out = infeasible(Method::TwoStage, b.note);
    out.dp = std::move(a.dp);
    return out;
  }
  Solution s;
  s.method = Method::TwoStage;
  s.pattern = a.pattern.united(b.pattern);
  s.cost = cost_of(s.pattern, costs);
  s.solved = true;
  s.dp = std::move(a.dp);
  s.matching = std::move(b.matching);
  return s;
}

Instance reduce_set_cover(const SetCoverInstance& inst) {
  validate(inst);
  const int universe = inst.universe_size;
  const int hub = universe;  // x_{N+1}
  const int r = static_cast<int>(inst.sets.size());
  StructuredSystem sys;
  sys.n = universe + 1;
  sys.m = 1;
  sys.p = r;
  for (int i = 0; i < sys.n; ++i) sys.a_edges.push_back({i, i});
  for (int i = 0; i < universe; ++i) sys.a_edges.push_back({i, hub});
  sys.b_edges.push_back({hub, 0});
  for (int s = 0; s < r; ++s)
    for (int e : inst.sets[s]) sys.c_edges.push_back({s, e});

  CostMatrix costs(1, r);
  for (int s = 0; s < r; ++s) costs.set(0, s, inst.weights[s]);
  return {make_system(std::move(sys)), std::move(costs)};
}

std::vector<int> selected_sets(const FeedbackPattern& pattern) {
  std::vector<int> out;
  for (const Link& l : pattern.links())
    if (l.input == 0) out.push_back(l.output);
  return out;
}

Solution pattern_for_cover(const SetCoverInstance& inst, const std::vector<int>& chosen) {
  Solution s;
  s.method = Method::Reduction;
  CostMatrix costs(1, static_cast<int>(inst.weights.size()));
  for (std::size_t j = 0; j < inst.weights.size(); ++j) costs.set(0, static_cast<int>(j), inst.weights[j]);
  for (int j : chosen) s.pattern.insert({0, j});
  s.cost = cost_of(s.pattern, costs);
  s.solved = s.cost.is_finite();
  return s;
}

Solution greedy_single_input(const StructuredSystem& sys, const CostMatrix& costs) {
  check_dimensions(sys, costs);
  if (sys.m != 1) {
    throw PreconditionError("greedy solver needs exactly one input, system has m=" +
                            std::to_string(sys.m));
  }
  if (!has_perfect_matching(state_bipartite(sys))) {
    throw PreconditionError("greedy solver needs a perfect matching in B(A)");
  }
  const Condensation cond = condense(sys);
  const int sources = static_cast<int>(
      std::count(cond.non_top_linked.begin(), cond.non_top_linked.end(), true));
  if (sources != 1) {
    throw PreconditionError("greedy solver needs exactly one non-top linked SCC, found " +
                            std::to_string(sources));
  }

  GreedyTrace trace;
  for (int k = 0; k < cond.size(); ++k)
    if (cond.non_bottom_linked[k]) trace.sink_sccs.push_back(k);
  const int beta = static_cast<int>(trace.sink_sccs.size());
  trace.sets.assign(sys.p, {});
  for (int b = 0; b < beta; ++b)
    for (int j : cond.output_incidence[trace.sink_sccs[b]]) trace.sets[j].push_back(b);

  // The source SCC is C_1; unless u_1 reaches it no cycle can pass through it.
  const auto& source_inputs = cond.input_incidence[0];
  if (std::find(source_inputs.begin(), source_inputs.end(), 0) == source_inputs.end()) {
    Solution s = infeasible(Method::Greedy, "u1 does not actuate the source SCC C1");
    s.greedy = std::move(trace);
    return s;
  }

  std::vector<bool> covered(beta, false);
  std::vector<bool> used(sys.p, false);
  int remaining = beta;
  Solution s;
  s.method = Method::Greedy;
  while (remaining > 0) {
    int best = -1;
    int best_new = 0;
    Cost best_weight = Cost::infinite();
    for (int j = 0; j < sys.p; ++j) {
      const Cost w = costs.at(0, j);
      if (used[j] || w.is_infinite()) continue;
      int fresh = 0;
      for (int b : trace.sets[j]) fresh += covered[b] ? 0 : 1;
      if (fresh == 0) continue;
      // w / fresh < best_weight / best_new, cross-multiplied.
      if (best < 0 || w.value() * best_new < best_weight.value() * fresh) {
        best = j;
        best_new = fresh;
        best_weight = w;
      }
    }
    if (best < 0) {
      Solution out = infeasible(Method::Greedy, "no finite-cost output senses every sink SCC");
      out.greedy = std::move(trace);
      return out;
    }
    used[best] = true;
    for (int b : trace.sets[best]) {
      if (!covered[b]) {
        covered[b] = true;
        --remaining;
      }
    }
    trace.steps.push_back({best, best_weight, best_new});
    s.pattern.insert({0, best});
  }
  s.cost = cost_of(s.pattern, costs);
  s.solved = true;
  s.greedy = std::move(trace);
  return s;
}

namespace {

// Lexicographic order of the sorted link sequences encoded by two masks
// over the same sorted link list.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  int bit = std::countr_zero(diff);
  bool a_has = (a >> bit) & 1U;
  std::uint64_t other = a_has ? b : a;
  bool other_ends = (other >> (bit + 1)) == 0;
  // The sequence holding the smaller link wins unless the other one is a
  // proper prefix of it.
  return a_has ? !other_ends : other_ends;
}

}  // namespace

ExactResult exact_search(const StructuredSystem& sys, const CostMatrix& costs, int budget) {
  check_dimensions(sys, costs);
  const FeedbackPattern allowed = FeedbackPattern::full(costs);
  const std::vector<Link> links(allowed.links().begin(), allowed.links().end());
  const int bits = static_cast<int>(links.size());
  if (bits > budget || bits > 62) {
    throw BudgetExceeded("exact search over " + std::to_string(bits) +
                         " finite-cost links exceeds the budget of " + std::to_string(budget) +
                         " (m=" + std::to_string(sys.m) + ", p=" + std::to_string(sys.p) + ")");
  }

  const std::uint64_t count = std::uint64_t{1} << bits;
  std::vector<double> price(count, 0.0);
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    int low = std::countr_zero(mask);
    price[mask] = price[mask & (mask - 1)] + costs.at(links[low].input, links[low].output).value();
  }
  std::vector<std::uint64_t> order(count);
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
    if (price[a] != price[b]) return price[a] < price[b];
    return lex_less(a, b);
  });

  auto to_pattern = [&](std::uint64_t mask) {
    std::vector<Link> chosen;
    for (int b = 0; b < bits; ++b)
      if ((mask >> b) & 1U) chosen.push_back(links[b]);
    return FeedbackPattern(std::move(chosen));
  };
  auto finish = [&](std::uint64_t mask) {
    Solution s;
    s.method = Method::Exact;
    s.pattern = to_pattern(mask);
    s.cost = cost_of(s.pattern, costs);
    s.solved = true;
    return s;
  };

  ExactResult result;
  result.patterns = count;
  result.optimum = infeasible(Method::Exact, "no feedback pattern avoids structurally fixed modes");
  result.condition_a = infeasible(Method::Exact, "no feedback pattern meets condition (a)");
  bool found_a = false;
  for (std::uint64_t mask : order) {
    const FeedbackPattern k = to_pattern(mask);
    if (!check_condition_a(sys, k).empty()) continue;
    if (!found_a) {
      result.condition_a = finish(mask);
      result.condition_a.condition_a_only = true;
      found_a = true;
    }
    if (check_condition_b(sys, k)) {
      result.optimum = finish(mask);
      break;
    }
  }
  return result;
}

Solution exact_oracle(const StructuredSystem& sys, const CostMatrix& costs, int budget) {
  return exact_search(sys, costs, budget).optimum;
}

}  // namespace fbsel
