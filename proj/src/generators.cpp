#include "fbsel/generators.hpp"

#include <algorithm>
#include <numeric>

namespace fbsel {

int SeededRng::uniform_int(int lo, int hi) {
  if (hi < lo) throw PreconditionError("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

double SeededRng::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

namespace {

template <class T>
void shuffle(std::vector<T>& v, SeededRng& rng) {
  for (int k = static_cast<int>(v.size()) - 1; k > 0; --k) std::swap(v[k], v[rng.uniform_int(0, k)]);
}

// Block k holds states blocks[k]; edges are added on block-local labels and
// relabelled through `label` at the end.
struct Layout {
  std::vector<std::vector<int>> blocks;
  int n = 0;
};

Layout make_blocks(const std::vector<int>& sizes) {
  Layout l;
  for (int s : sizes) {
    std::vector<int> block(s);
    std::iota(block.begin(), block.end(), l.n);
    l.n += s;
    l.blocks.push_back(std::move(block));
  }
  return l;
}

void add_cycles(const Layout& l, bool self_loop_singletons, std::vector<Entry>& a) {
  for (const auto& block : l.blocks) {
    const int s = static_cast<int>(block.size());
    if (s == 1) {
      if (self_loop_singletons) a.push_back({block[0], block[0]});
      continue;
    }
    for (int k = 0; k < s; ++k) a.push_back({block[(k + 1) % s], block[k]});
  }
}

int pick(const std::vector<int>& block, SeededRng& rng) {
  return block[rng.uniform_int(0, static_cast<int>(block.size()) - 1)];
}

Cost draw_cost(SeededRng& rng, int lo, int hi) { return Cost(static_cast<double>(rng.uniform_int(lo, hi))); }

void relabel(StructuredSystem& sys, SeededRng& rng) {
  std::vector<int> label(sys.n);
  std::iota(label.begin(), label.end(), 0);
  shuffle(label, rng);
  for (Entry& e : sys.a_edges) e = {label[e.row], label[e.col]};
  for (Entry& e : sys.b_edges) e.row = label[e.row];
  for (Entry& e : sys.c_edges) e.col = label[e.col];
}

void check_costs(int lo, int hi) {
  if (lo < 0 || hi < lo) throw PreconditionError("cost range must satisfy 0 <= cost_min <= cost_max");
}

}  // namespace

Instance generate_line(const LineParams& params) {
  if (params.scc_count < 1) throw PreconditionError("scc_count must be at least 1");
  if (params.scc_size_min < 1 || params.scc_size_max < params.scc_size_min)
    throw PreconditionError("SCC sizes must satisfy 1 <= min <= max");
  if (params.inputs < 1 || params.outputs < 1) throw PreconditionError("need at least one input and one output");
  check_costs(params.cost_min, params.cost_max);

  SeededRng rng(params.seed);
  std::vector<int> sizes(params.scc_count);
  for (int& s : sizes) s = rng.uniform_int(params.scc_size_min, params.scc_size_max);
  if (!params.perfect_matching) sizes[0] = 1;
  const Layout l = make_blocks(sizes);

  StructuredSystem sys;
  sys.n = l.n;
  sys.m = params.inputs;
  sys.p = params.outputs;
  add_cycles(l, params.perfect_matching, sys.a_edges);
  if (!params.perfect_matching) {
    for (std::size_t k = 1; k < l.blocks.size(); ++k)
      if (l.blocks[k].size() == 1) sys.a_edges.push_back({l.blocks[k][0], l.blocks[k][0]});
  }

  const int blocks = params.scc_count;
  for (int k = 0; k + 1 < blocks; ++k) sys.a_edges.push_back({pick(l.blocks[k + 1], rng), pick(l.blocks[k], rng)});
  for (int k = 0; k < blocks; ++k)
    for (int t = k + 2; t < blocks; ++t)
      if (rng.chance(params.shortcut_density)) sys.a_edges.push_back({pick(l.blocks[t], rng), pick(l.blocks[k], rng)});

  for (int i = 0; i < sys.m; ++i)
    for (int x = 0; x < sys.n; ++x)
      if (rng.chance(params.input_density)) sys.b_edges.push_back({x, i});
  for (int j = 0; j < sys.p; ++j)
    for (int x = 0; x < sys.n; ++x)
      if (rng.chance(params.output_density)) sys.c_edges.push_back({j, x});
  const int anchor_in = rng.uniform_int(0, sys.m - 1);
  const int anchor_out = rng.uniform_int(0, sys.p - 1);
  sys.b_edges.push_back({pick(l.blocks.front(), rng), anchor_in});
  sys.c_edges.push_back({anchor_out, pick(l.blocks.back(), rng)});

  CostMatrix costs(sys.m, sys.p);
  for (int i = 0; i < sys.m; ++i)
    for (int j = 0; j < sys.p; ++j)
      costs.set(i, j,
                rng.chance(params.forbidden_density) ? Cost::infinite()
                                                     : draw_cost(rng, params.cost_min, params.cost_max));
  if (costs.at(anchor_in, anchor_out).is_infinite())
    costs.set(anchor_in, anchor_out, draw_cost(rng, params.cost_min, params.cost_max));

  relabel(sys, rng);
  return {make_system(std::move(sys)), std::move(costs)};
}

Instance generate_single_input(const SingleInputParams& params) {
  if (params.scc_count < 1) throw PreconditionError("scc_count must be at least 1");
  if (params.scc_size_max < 1) throw PreconditionError("scc_size_max must be at least 1");
  if (params.outputs < 1) throw PreconditionError("need at least one output");
  check_costs(params.cost_min, params.cost_max);

  SeededRng rng(params.seed);
  std::vector<int> sizes(params.scc_count);
  for (int& s : sizes) s = rng.uniform_int(1, params.scc_size_max);
  const Layout l = make_blocks(sizes);

  StructuredSystem sys;
  sys.n = l.n;
  sys.m = 1;
  sys.p = params.outputs;
  add_cycles(l, true, sys.a_edges);

  const int blocks = params.scc_count;
  std::vector<bool> has_child(blocks, false);
  for (int k = 1; k < blocks; ++k) {
    const int parent = params.star ? 0 : rng.uniform_int(0, k - 1);
    sys.a_edges.push_back({pick(l.blocks[k], rng), pick(l.blocks[parent], rng)});
    has_child[parent] = true;
    for (int q = 0; q < k; ++q) {
      if (params.star || q == parent || !rng.chance(params.extra_edge_density)) continue;
      sys.a_edges.push_back({pick(l.blocks[k], rng), pick(l.blocks[q], rng)});
      has_child[q] = true;
    }
  }

  sys.b_edges.push_back({pick(l.blocks.front(), rng), 0});
  std::vector<bool> sensed(l.n, false);
  for (int j = 0; j < sys.p; ++j)
    for (int x = 0; x < sys.n; ++x)
      if (rng.chance(params.output_density)) {
        sys.c_edges.push_back({j, x});
        sensed[x] = true;
      }
  for (int k = 0; k < blocks; ++k) {
    if (has_child[k]) continue;
    const auto& block = l.blocks[k];
    if (std::any_of(block.begin(), block.end(), [&](int x) { return sensed[x]; })) continue;
    sys.c_edges.push_back({rng.uniform_int(0, sys.p - 1), pick(block, rng)});
  }

  CostMatrix costs(1, sys.p);
  for (int j = 0; j < sys.p; ++j) costs.set(0, j, draw_cost(rng, params.cost_min, params.cost_max));

  relabel(sys, rng);
  return {make_system(std::move(sys)), std::move(costs)};
}

}  // namespace fbsel
