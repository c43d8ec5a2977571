#include "fbsel/graphs.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace fbsel {

Digraph::Digraph(int n, int m, int p) : n_(n), m_(m), p_(p) {
  if (n < 0 || m < 0 || p < 0) throw DimensionError("digraph sizes must be nonnegative");
}

NodeKind Digraph::kind(int v) const {
  if (v < n_) return NodeKind::State;
  if (v < n_ + m_) return NodeKind::Input;
  return NodeKind::Output;
}

int Digraph::local_index(int v) const {
  switch (kind(v)) {
    case NodeKind::State: return v;
    case NodeKind::Input: return v - n_;
    case NodeKind::Output: return v - n_ - m_;
  }
  return v;
}

std::string Digraph::name(int v) const {
  static constexpr char prefix[] = {'x', 'u', 'y'};
  return prefix[static_cast<int>(kind(v))] + std::to_string(local_index(v) + 1);
}

void Digraph::add_edge(int from, int to, EdgeKind kind) {
  if (from < 0 || to < 0 || from >= num_vertices() || to >= num_vertices()) {
    throw DimensionError("digraph edge endpoint out of range");
  }
  edges_.push_back({from, to, kind});
}

bool Digraph::has_edge(int from, int to) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [&](const DiEdge& e) { return e.from == from && e.to == to; });
}

std::vector<std::vector<int>> Digraph::adjacency() const {
  std::vector<std::vector<int>> adj(num_vertices());
  for (const DiEdge& e : edges_) adj[e.from].push_back(e.to);
  for (auto& out : adj) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return adj;
}

Digraph state_digraph(const StructuredSystem& sys) {
  Digraph d(sys.n, 0, 0);
  for (const Entry& e : sys.a_edges) d.add_edge(d.state(e.col), d.state(e.row), EdgeKind::State);
  return d;
}

Digraph closed_loop_digraph(const StructuredSystem& sys, const FeedbackPattern& k) {
  check_pattern(k, sys.m, sys.p);
  Digraph d(sys.n, sys.m, sys.p);
  for (const Entry& e : sys.a_edges) d.add_edge(d.state(e.col), d.state(e.row), EdgeKind::State);
  for (const Entry& e : sys.b_edges) d.add_edge(d.input(e.col), d.state(e.row), EdgeKind::Input);
  for (const Entry& e : sys.c_edges) d.add_edge(d.state(e.col), d.output(e.row), EdgeKind::Output);
  for (const Link& l : k.links()) d.add_edge(d.output(l.output), d.input(l.input), EdgeKind::Feedback);
  return d;
}

std::vector<int> strongly_connected_components(const std::vector<std::vector<int>>& adjacency,
                                               int* count) {
  const int nv = static_cast<int>(adjacency.size());
  std::vector<int> index(nv, -1), low(nv, 0), comp(nv, -1);
  std::vector<bool> on_stack(nv, false);
  std::vector<int> stack;
  // Explicit call stack of (vertex, next neighbour position).
  std::vector<std::pair<int, std::size_t>> frames;
  int next_index = 0;
  int components = 0;

  for (int root = 0; root < nv; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < adjacency[v].size()) {
        int w = adjacency[v][pos++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      int finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  if (count) *count = components;
  return comp;
}

bool Condensation::has_dag_edge(int from, int to) const {
  return std::binary_search(dag_edges.begin(), dag_edges.end(), std::pair{from, to});
}

Condensation condense(const StructuredSystem& sys) {
  const Digraph d = state_digraph(sys);
  int count = 0;
  const std::vector<int> raw = strongly_connected_components(d.adjacency(), &count);

  std::vector<int> min_state(count, std::numeric_limits<int>::max());
  for (int x = 0; x < sys.n; ++x) min_state[raw[x]] = std::min(min_state[raw[x]], x);

  std::vector<std::set<int>> succ(count);
  std::vector<int> indegree(count, 0);
  for (const Entry& e : sys.a_edges) {
    int from = raw[e.col], to = raw[e.row];
    if (from != to && succ[from].insert(to).second) ++indegree[to];
  }

  // Kahn's algorithm, smallest member state first.
  using Item = std::pair<int, int>;  // (min state, raw id)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (int c = 0; c < count; ++c)
    if (indegree[c] == 0) ready.push({min_state[c], c});
  std::vector<int> order_of(count, -1);
  int next = 0;
  while (!ready.empty()) {
    int c = ready.top().second;
    ready.pop();
    order_of[c] = next++;
    for (int s : succ[c])
      if (--indegree[s] == 0) ready.push({min_state[s], s});
  }

  Condensation out;
  out.sccs.resize(count);
  out.scc_of.resize(sys.n);
  for (int x = 0; x < sys.n; ++x) {
    out.scc_of[x] = order_of[raw[x]];
    out.sccs[out.scc_of[x]].push_back(x);
  }
  for (int c = 0; c < count; ++c)
    for (int s : succ[c]) out.dag_edges.push_back({order_of[c], order_of[s]});
  std::sort(out.dag_edges.begin(), out.dag_edges.end());

  out.non_top_linked.assign(count, true);
  out.non_bottom_linked.assign(count, true);
  for (auto [from, to] : out.dag_edges) {
    out.non_bottom_linked[from] = false;
    out.non_top_linked[to] = false;
  }

  std::vector<std::set<int>> inputs(count), outputs(count);
  for (const Entry& e : sys.b_edges) inputs[out.scc_of[e.row]].insert(e.col);
  for (const Entry& e : sys.c_edges) outputs[out.scc_of[e.col]].insert(e.row);
  for (int k = 0; k < count; ++k) {
    out.input_incidence.emplace_back(inputs[k].begin(), inputs[k].end());
    out.output_incidence.emplace_back(outputs[k].begin(), outputs[k].end());
  }
  return out;
}

std::vector<std::pair<int, int>> missing_line_links(const Condensation& c) {
  std::vector<std::pair<int, int>> missing;
  for (int k = 0; k + 1 < c.size(); ++k)
    if (!c.has_dag_edge(k, k + 1)) missing.push_back({k, k + 1});
  return missing;
}

bool is_line_dag(const Condensation& c) {
  return missing_line_links(c).empty() &&
         c.dag_edges.size() == static_cast<std::size_t>(std::max(c.size() - 1, 0));
}

std::optional<std::vector<int>> has_line_spanning_path(const Condensation& c) {
  if (!missing_line_links(c).empty()) return std::nullopt;
  std::vector<int> path(c.size());
  for (int k = 0; k < c.size(); ++k) path[k] = k;
  return path;
}

namespace {

std::string label(char prefix, int i, bool primed) {
  return prefix + std::to_string(i + 1) + (primed ? "'" : "");
}

void add_labels(BipartiteGraph& g, int n, int m, int p) {
  for (int i = 0; i < n; ++i) g.left.push_back(label('x', i, true));
  for (int i = 0; i < m; ++i) g.left.push_back(label('u', i, true));
  for (int j = 0; j < p; ++j) g.left.push_back(label('y', j, true));
  for (int i = 0; i < n; ++i) g.right.push_back(label('x', i, false));
  for (int i = 0; i < m; ++i) g.right.push_back(label('u', i, false));
  for (int j = 0; j < p; ++j) g.right.push_back(label('y', j, false));
}

}  // namespace

BipartiteGraph state_bipartite(const StructuredSystem& sys) {
  BipartiteGraph g;
  add_labels(g, sys.n, 0, 0);
  for (const Entry& e : sys.a_edges) g.edges.push_back({e.row, e.col, Cost::zero(), BipartiteKind::State});
  return g;
}

BipartiteGraph closed_loop_bipartite(const StructuredSystem& sys, const FeedbackPattern& k,
                                     const CostMatrix* costs) {
  check_pattern(k, sys.m, sys.p);
  if (costs) check_dimensions(sys, *costs);
  const int n = sys.n, m = sys.m;
  const int u0 = n, y0 = n + m;
  BipartiteGraph g;
  add_labels(g, n, m, sys.p);
  for (const Entry& e : sys.a_edges) g.edges.push_back({e.row, e.col, Cost::zero(), BipartiteKind::State});
  for (const Entry& e : sys.b_edges)
    g.edges.push_back({e.row, u0 + e.col, Cost::zero(), BipartiteKind::Input});
  for (const Entry& e : sys.c_edges)
    g.edges.push_back({y0 + e.row, e.col, Cost::zero(), BipartiteKind::Output});
  for (const Link& l : k.links()) {
    Cost c = costs ? costs->at(l.input, l.output) : Cost::zero();
    g.edges.push_back({u0 + l.input, y0 + l.output, c, BipartiteKind::Feedback});
  }
  for (int i = 0; i < m; ++i) g.edges.push_back({u0 + i, u0 + i, Cost::zero(), BipartiteKind::InputIdentity});
  for (int j = 0; j < sys.p; ++j)
    g.edges.push_back({y0 + j, y0 + j, Cost::zero(), BipartiteKind::OutputIdentity});
  return g;
}

namespace {

// Hopcroft-Karp over the finite-cost edges of g.
class HopcroftKarp {
public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : nl_(g.left_count()), nr_(g.right_count()), adj_(nl_) {
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      const BipartiteEdge& be = g.edges[e];
      if (be.left < 0 || be.left >= nl_ || be.right < 0 || be.right >= nr_) {
        throw DimensionError("bipartite edge endpoint out of range");
      }
      if (be.cost.is_finite()) adj_[be.left].push_back({be.right, e});
    }
    mate_l_.assign(nl_, -1);
    edge_l_.assign(nl_, -1);
    mate_r_.assign(nr_, -1);
    dist_.assign(nl_, 0);
  }

  int run() {
    int size = 0;
    while (bfs()) {
      it_.assign(nl_, 0);
      for (int l = 0; l < nl_; ++l)
        if (mate_l_[l] == -1 && dfs(l)) ++size;
    }
    return size;
  }

  const std::vector<int>& left_mate() const { return mate_l_; }
  const std::vector<int>& left_edge() const { return edge_l_; }

private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (int l = 0; l < nl_; ++l) {
      if (mate_l_[l] == -1) {
        dist_[l] = 0;
        q.push(l);
      } else {
        dist_[l] = kInf;
      }
    }
    while (!q.empty()) {
      int l = q.front();
      q.pop();
      for (auto [r, e] : adj_[l]) {
        int next = mate_r_[r];
        if (next == -1) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[l] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(int l) {
    for (std::size_t& i = it_[l]; i < adj_[l].size(); ++i) {
      auto [r, e] = adj_[l][i];
      int next = mate_r_[r];
      if (next == -1 || (dist_[next] == dist_[l] + 1 && dfs(next))) {
        mate_l_[l] = r;
        edge_l_[l] = e;
        mate_r_[r] = l;
        return true;
      }
    }
    dist_[l] = kInf;
    return false;
  }

  int nl_;
  int nr_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<int> mate_l_, edge_l_, mate_r_, dist_;
  std::vector<std::size_t> it_;
};

}  // namespace

Matching max_matching(const BipartiteGraph& g) {
  HopcroftKarp hk(g);
  hk.run();
  Matching out;
  out.left_mate = hk.left_mate();
  for (int l = 0; l < g.left_count(); ++l) {
    int e = hk.left_edge()[l];
    if (e >= 0) {
      out.edges.push_back(e);
      out.cost += g.edges[e].cost;
    }
  }
  return out;
}

bool has_perfect_matching(const BipartiteGraph& g) {
  if (g.left_count() != g.right_count()) return false;
  return max_matching(g).size() == g.left_count();
}

std::optional<Matching> min_cost_perfect_matching(const BipartiteGraph& g) {
  const int n = g.left_count();
  if (n != g.right_count()) {
    throw DimensionError("perfect matching needs equal sides, got " + std::to_string(n) + " and " +
                         std::to_string(g.right_count()));
  }
  if (!has_perfect_matching(g)) return std::nullopt;

  // Cheapest parallel edge per cell; forbidden cells stay infinite.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> cost(static_cast<std::size_t>(n) * n, kInf);
  std::vector<int> cell_edge(static_cast<std::size_t>(n) * n, -1);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const BipartiteEdge& be = g.edges[e];
    if (be.cost.is_infinite()) continue;
    std::size_t cell = static_cast<std::size_t>(be.left) * n + be.right;
    if (be.cost.value() < cost[cell]) {
      cost[cell] = be.cost.value();
      cell_edge[cell] = e;
    }
  }

  // Successive shortest augmenting paths with potentials (Hungarian method),
  // 1-based with column 0 as the virtual source.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> row_of(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    row_of[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      int i0 = row_of[j0], j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double c = cost[static_cast<std::size_t>(i0 - 1) * n + (j - 1)];
        double cur = c == kInf ? kInf : c - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (j1 == 0 || delta == kInf) return std::nullopt;
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else if (minv[j] != kInf) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      int j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Matching out;
  out.left_mate.assign(n, -1);
  for (int j = 1; j <= n; ++j) {
    int i = row_of[j];
    if (i == 0) continue;
    int e = cell_edge[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    if (e < 0) return std::nullopt;
    out.left_mate[i - 1] = j - 1;
    out.edges.push_back(e);
    out.cost += g.edges[e].cost;
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace fbsel
