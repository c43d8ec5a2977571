#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fbsel/model.hpp"

namespace fbsel {

enum class NodeKind { State, Input, Output };

/// Origin of a digraph edge: state->state, input->state, state->output,
/// output->input.
enum class EdgeKind { State, Input, Output, Feedback };

struct DiEdge {
  int from = 0;
  int to = 0;
  EdgeKind kind = EdgeKind::State;
};

/// Directed graph over states x_1..x_n, inputs u_1..u_m and outputs
/// y_1..y_p. Vertex ids are laid out states first, then inputs, then outputs.
class Digraph {
public:
  Digraph(int n, int m, int p);

  int num_states() const { return n_; }
  int num_inputs() const { return m_; }
  int num_outputs() const { return p_; }
  int num_vertices() const { return n_ + m_ + p_; }

  int state(int i) const { return i; }
  int input(int i) const { return n_ + i; }
  int output(int j) const { return n_ + m_ + j; }

  NodeKind kind(int v) const;
  /// Index of `v` within its own kind.
  int local_index(int v) const;
  /// Stable 1-based name: x1.., u1.., y1..
  std::string name(int v) const;

  void add_edge(int from, int to, EdgeKind kind);
  std::span<const DiEdge> edges() const { return edges_; }
  bool has_edge(int from, int to) const;

  /// Out-neighbour lists, sorted.
  std::vector<std::vector<int>> adjacency() const;

private:
  int n_;
  int m_;
  int p_;
  std::vector<DiEdge> edges_;
};

/// D(A): states only.
Digraph state_digraph(const StructuredSystem& sys);

/// D(A, B, C, K). An empty pattern gives D(A, B, C).
Digraph closed_loop_digraph(const StructuredSystem& sys, const FeedbackPattern& k);

/// Component id per vertex (Tarjan). Ids are in reverse topological order of
/// the condensation: an edge u -> v between components implies id(u) >= id(v).
std::vector<int> strongly_connected_components(const std::vector<std::vector<int>>& adjacency,
                                               int* count = nullptr);

/// SCCs of D(A) in topological order with their input/output incidence.
struct Condensation {
  std::vector<std::vector<int>> sccs;         // sorted state indices per SCC
  std::vector<int> scc_of;                    // state -> SCC index
  std::vector<std::pair<int, int>> dag_edges; // sorted, unique, first < second
  std::vector<bool> non_top_linked;           // no DAG edge enters
  std::vector<bool> non_bottom_linked;        // no DAG edge leaves
  std::vector<std::vector<int>> input_incidence;   // inputs actuating some state of the SCC
  std::vector<std::vector<int>> output_incidence;  // outputs sensing some state of the SCC

  int size() const { return static_cast<int>(sccs.size()); }
  bool has_dag_edge(int from, int to) const;
};

/// Ties in the topological order go to the SCC holding the smallest state.
Condensation condense(const StructuredSystem& sys);

/// True iff the DAG is exactly C_1 -> C_2 -> ... -> C_l.
bool is_line_dag(const Condensation& c);

/// The Hamiltonian path of the DAG (as SCC indices) if one exists. Because
/// SCCs are already topologically ordered this is the identity order or none.
std::optional<std::vector<int>> has_line_spanning_path(const Condensation& c);

/// Consecutive SCC pairs (k, k+1) lacking a DAG edge.
std::vector<std::pair<int, int>> missing_line_links(const Condensation& c);

enum class BipartiteKind { State, Input, Output, Feedback, InputIdentity, OutputIdentity };

struct BipartiteEdge {
  int left = 0;
  int right = 0;
  Cost cost;
  BipartiteKind kind = BipartiteKind::State;
};

struct BipartiteGraph {
  std::vector<std::string> left;
  std::vector<std::string> right;
  std::vector<BipartiteEdge> edges;

  int left_count() const { return static_cast<int>(left.size()); }
  int right_count() const { return static_cast<int>(right.size()); }
};

/// B(A): left x'_i, right x_j, edge (x'_i, x_j) iff x_j -> x_i.
BipartiteGraph state_bipartite(const StructuredSystem& sys);

/// B(A, B, C, K) with left [x', u', y'] and right [x, u, y]. Edge costs are
/// zero except feedback edges (u'_i, y_j), which carry P_ij when `costs` is
/// given.
BipartiteGraph closed_loop_bipartite(const StructuredSystem& sys, const FeedbackPattern& k,
                                     const CostMatrix* costs = nullptr);

struct Matching {
  std::vector<int> edges;     // indices into BipartiteGraph::edges
  std::vector<int> left_mate; // right vertex or -1
  Cost cost;

  int size() const { return static_cast<int>(edges.size()); }
};

/// Maximum-cardinality matching (Hopcroft-Karp).
Matching max_matching(const BipartiteGraph& g);

bool has_perfect_matching(const BipartiteGraph& g);

/// Minimum-cost perfect matching over finite-cost edges, or nullopt when
/// none exists. Throws `DimensionError` if the sides differ in size.
std::optional<Matching> min_cost_perfect_matching(const BipartiteGraph& g);

}  // namespace fbsel
