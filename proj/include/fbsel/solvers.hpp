#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fbsel/graphs.hpp"
#include "fbsel/model.hpp"

namespace fbsel {

/// The exhaustive solver refused an instance larger than its budget.
class BudgetExceeded : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

enum class Method { Dp, TwoStage, Greedy, Exact, Reduction };

std::string_view to_string(Method method);

/// Winning edge of one DP stage. Stages are 1-based: stage k covers C_1..C_k.
struct DpStage {
  Link edge;
  int first_stage = 0;  // t(input): first SCC stage the input actuates
  int predecessor = 0;  // t - 1
};

struct DpTable {
  std::vector<Cost> w;                       // w[0] = 0, w[k] = cheapest cover of C_1..C_k
  std::vector<std::optional<DpStage>> choice; // choice[0] is unused
  std::vector<int> first_stage;              // t per input, 0 when it actuates nothing
  std::vector<int> last_stage;               // last SCC stage each output senses, 0 if none

  int stages() const { return static_cast<int>(w.size()) - 1; }
  /// Whether link (input, output) lies in A_k.
  bool covers(Link link, int k) const;
};

struct GreedyStep {
  int output = 0;
  Cost weight;
  int newly_covered = 0;
};

struct GreedyTrace {
  std::vector<int> sink_sccs;             // universe element -> SCC index
  std::vector<std::vector<int>> sets;     // per output, universe elements it senses
  std::vector<GreedyStep> steps;
};

struct MatchingCertificate {
  std::vector<std::pair<std::string, std::string>> pairs;  // (left, right) labels
  Cost cost;
};

/// Result of a feedback-selection algorithm.
struct Solution {
  FeedbackPattern pattern;
  Cost cost = Cost::infinite();
  Method method = Method::Exact;
  /// A finite-cost pattern was produced. Infeasible results carry an empty
  /// pattern, infinite cost and a `note` naming the cause.
  bool solved = false;
  /// Only condition (a) is guaranteed (DP run without a perfect matching in
  /// B(A)).
  bool condition_a_only = false;
  std::string note;

  std::optional<DpTable> dp;
  std::optional<MatchingCertificate> matching;
  std::optional<GreedyTrace> greedy;
};

/// Stage-wise interval-cover recurrence over an ordered condensation. Does
/// not check the line-graph precondition.
DpTable dp_table(const Condensation& cond, const CostMatrix& costs);

/// Cheapest pattern meeting condition (a) on a line (or spanning-line)
/// condensation. Throws `PreconditionError` naming the missing DAG links
/// otherwise.
Solution dp_cover(const Condensation& cond, const CostMatrix& costs);

/// Condenses `sys`, runs `dp_cover`, and tags the result as condition-(a)
/// only when B(A) has no perfect matching.
Solution solve_dp(const StructuredSystem& sys, const CostMatrix& costs);

/// Cheapest pattern meeting condition (b): min-cost perfect matching of
/// B(A, B, C, K) with every allowed feedback edge priced at P_ij.
Solution min_cost_condition_b(const StructuredSystem& sys, const CostMatrix& costs);

/// Union of the DP and the matching stage; at most twice the optimum.
Solution two_stage(const StructuredSystem& sys, const CostMatrix& costs);

/// Builds the single-input system whose feasible patterns are exactly the
/// set covers, with P(K) equal to the cover weight.
Instance reduce_set_cover(const SetCoverInstance& inst);

/// Sets (0-based) selected by a pattern on a reduced instance.
std::vector<int> selected_sets(const FeedbackPattern& pattern);

/// Pattern on the reduced instance that feeds every chosen set's output.
Solution pattern_for_cover(const SetCoverInstance& inst, const std::vector<int>& chosen);

/// Chvatal greedy over the sink SCCs for single-input systems with one
/// source SCC and a perfect matching in B(A). Within H(beta) of optimal.
Solution greedy_single_input(const StructuredSystem& sys, const CostMatrix& costs);

struct ExactResult {
  Solution optimum;       // cheapest pattern with no structurally fixed modes
  Solution condition_a;   // cheapest pattern meeting condition (a) alone
  std::size_t patterns = 0;  // size of the enumerated space
};

/// Enumerates every subset of finite-cost links, cheapest first, with ties
/// broken by lexicographic link order. Throws `BudgetExceeded` when there
/// are more than `budget` finite-cost links.
ExactResult exact_search(const StructuredSystem& sys, const CostMatrix& costs, int budget = 20);

Solution exact_oracle(const StructuredSystem& sys, const CostMatrix& costs, int budget = 20);

}  // namespace fbsel
