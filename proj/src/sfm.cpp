#include "fbsel/sfm.hpp"

#include "fbsel/graphs.hpp"

namespace fbsel {

std::vector<int> check_condition_a(const StructuredSystem& sys, const FeedbackPattern& k) {
  const Digraph d = closed_loop_digraph(sys, k);
  int count = 0;
  const std::vector<int> comp = strongly_connected_components(d.adjacency(), &count);

  // A feedback edge lies inside an SCC iff both of its endpoints do.
  std::vector<bool> has_feedback(count, false);
  for (const Link& l : k.links()) {
    int y = comp[d.output(l.output)];
    if (y == comp[d.input(l.input)]) has_feedback[y] = true;
  }
  std::vector<int> uncovered;
  for (int x = 0; x < sys.n; ++x)
    if (!has_feedback[comp[d.state(x)]]) uncovered.push_back(x);
  return uncovered;
}

bool check_condition_b(const StructuredSystem& sys, const FeedbackPattern& k) {
  return has_perfect_matching(closed_loop_bipartite(sys, k));
}

SfmVerdict check_no_sfm(const StructuredSystem& sys, const FeedbackPattern& k) {
  SfmVerdict v;
  v.uncovered_states = check_condition_a(sys, k);
  v.condition_b = check_condition_b(sys, k);
  return v;
}

}  // namespace fbsel
