#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fbsel/model.hpp"
#include "fbsel/sfm.hpp"
#include "fbsel/solvers.hpp"

namespace fbsel {

/// What a CLI command prints. The cost is always recomputed from `links`
/// and the input cost matrix, never copied from a solver.
struct RunReport {
  std::string command;
  std::optional<Method> method;
  bool solved = true;
  SfmVerdict verdict;
  FeedbackPattern links;
  Cost cost;
  bool condition_a_only = false;
  std::string note;
  std::optional<double> elapsed_ms;

  std::optional<DpTable> dp;
  std::optional<MatchingCertificate> matching;
  std::optional<GreedyTrace> greedy;

  bool feasible() const { return solved && verdict.feasible(); }
};

/// Report for a solver result; runs `check_no_sfm` on the pattern.
RunReport make_report(std::string command, const Instance& inst, const Solution& solution);

/// Report for a user-supplied pattern.
RunReport make_check_report(const Instance& inst, const FeedbackPattern& pattern);

/// Human-readable text, 1-based.
std::string format_text(const RunReport& report);

/// One JSON object, 1-based, with "inf" for forbidden cost.
std::string format_structured(const RunReport& report);

}  // namespace fbsel
