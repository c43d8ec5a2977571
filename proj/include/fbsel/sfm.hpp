#pragma once

#include <vector>

#include "fbsel/model.hpp"

namespace fbsel {

/// Structurally-fixed-mode verdict for a closed-loop pattern.
struct SfmVerdict {
  /// States whose closed-loop SCC holds no feedback edge (0-based). Empty
  /// means condition (a) passes.
  std::vector<int> uncovered_states;
  /// Whether the states can be spanned by vertex-disjoint cycles.
  bool condition_b = false;

  bool condition_a() const { return uncovered_states.empty(); }
  bool feasible() const { return condition_a() && condition_b; }
};

/// Condition (a): every state shares a closed-loop SCC with some feedback
/// edge. Returns the failing states.
std::vector<int> check_condition_a(const StructuredSystem& sys, const FeedbackPattern& k);

/// Condition (b): B(A, B, C, K) has a perfect matching.
bool check_condition_b(const StructuredSystem& sys, const FeedbackPattern& k);

/// Both conditions; feasible means generic arbitrary pole placement.
SfmVerdict check_no_sfm(const StructuredSystem& sys, const FeedbackPattern& k);

}  // namespace fbsel
