#include "fbsel/model.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace fbsel {

Cost Cost::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("scale factor must be positive");
  if (is_infinite()) return *this;
  return Cost(value_ * factor);
}

std::string Cost::to_string() const {
  if (is_infinite()) return "inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value_);
  return std::string(buf, end);
}

namespace {

void check_edges(const std::vector<Entry>& edges, const char* name, int rows, int cols,
                 const char* row_kind, const char* col_kind, ValidationReport& report) {
  std::set<Entry> seen;
  for (const Entry& e : edges) {
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols) {
      std::ostringstream os;
      os << name << " entry (" << e.row + 1 << ", " << e.col + 1 << ") out of range: " << row_kind
         << " index must be in [1, " << rows << "], " << col_kind << " index in [1, " << cols << "]";
      report.violations.push_back(os.str());
      continue;
    }
    if (!seen.insert(e).second) {
      std::ostringstream os;
      os << name << " entry (" << e.row + 1 << ", " << e.col + 1 << ") listed more than once";
      report.warnings.push_back(os.str());
    }
  }
}

void sort_unique(std::vector<Entry>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace

ValidationReport validate(const StructuredSystem& sys) {
  ValidationReport report;
  if (sys.n < 1) report.violations.push_back("n must be at least 1");
  if (sys.m < 0) report.violations.push_back("m must be nonnegative");
  if (sys.p < 0) report.violations.push_back("p must be nonnegative");
  if (!report.ok()) return report;
  check_edges(sys.a_edges, "a_edges", sys.n, sys.n, "state", "state", report);
  check_edges(sys.b_edges, "b_edges", sys.n, sys.m, "state", "input", report);
  check_edges(sys.c_edges, "c_edges", sys.p, sys.n, "output", "state", report);
  return report;
}

StructuredSystem canonicalize(StructuredSystem sys) {
  sort_unique(sys.a_edges);
  sort_unique(sys.b_edges);
  sort_unique(sys.c_edges);
  return sys;
}

StructuredSystem make_system(StructuredSystem sys, std::vector<std::string>* warnings) {
  ValidationReport report = validate(sys);
  if (!report.ok()) {
    std::string msg = "invalid structured system:";
    for (const auto& v : report.violations) msg += "\n  " + v;
    throw DimensionError(msg);
  }
  if (warnings) warnings->insert(warnings->end(), report.warnings.begin(), report.warnings.end());
  return canonicalize(std::move(sys));
}

CostMatrix::CostMatrix(int rows, int cols, Cost fill) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionError("cost matrix dimensions must be nonnegative");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill);
}

CostMatrix CostMatrix::from_rows(const std::vector<std::vector<Cost>>& rows, int cols_if_empty) {
  int cols = rows.empty() ? cols_if_empty : static_cast<int>(rows.front().size());
  CostMatrix out(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < out.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != cols) {
      throw DimensionError("cost matrix row " + std::to_string(i + 1) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(cols));
    }
    for (int j = 0; j < cols; ++j) out.set(i, j, rows[i][j]);
  }
  return out;
}

void CostMatrix::check(int input, int output) const {
  if (input < 0 || input >= rows_ || output < 0 || output >= cols_) {
    throw DimensionError("cost index (" + std::to_string(input + 1) + ", " +
                         std::to_string(output + 1) + ") outside " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " matrix");
  }
}

Cost CostMatrix::at(int input, int output) const {
  check(input, output);
  return entries_[static_cast<std::size_t>(input) * cols_ + output];
}

void CostMatrix::set(int input, int output, Cost value) {
  check(input, output);
  entries_[static_cast<std::size_t>(input) * cols_ + output] = value;
}

CostMatrix CostMatrix::scaled(double factor) const {
  CostMatrix out = *this;
  for (Cost& c : out.entries_) c = c.scaled(factor);
  return out;
}

void check_dimensions(const StructuredSystem& sys, const CostMatrix& costs) {
  if (costs.rows() != sys.m || costs.cols() != sys.p) {
    throw DimensionError("cost matrix is " + std::to_string(costs.rows()) + "x" +
                         std::to_string(costs.cols()) + " but the system has m=" +
                         std::to_string(sys.m) + ", p=" + std::to_string(sys.p));
  }
}

FeedbackPattern::FeedbackPattern(std::vector<Link> links) : links_(std::move(links)) {
  std::sort(links_.begin(), links_.end());
  links_.erase(std::unique(links_.begin(), links_.end()), links_.end());
}

FeedbackPattern FeedbackPattern::full(const CostMatrix& costs) {
  std::vector<Link> links;
  for (int i = 0; i < costs.rows(); ++i)
    for (int j = 0; j < costs.cols(); ++j)
      if (costs.at(i, j).is_finite()) links.push_back({i, j});
  return FeedbackPattern(std::move(links));
}

bool FeedbackPattern::contains(Link link) const {
  return std::binary_search(links_.begin(), links_.end(), link);
}

void FeedbackPattern::insert(Link link) {
  auto it = std::lower_bound(links_.begin(), links_.end(), link);
  if (it == links_.end() || *it != link) links_.insert(it, link);
}

FeedbackPattern FeedbackPattern::united(const FeedbackPattern& other) const {
  std::vector<Link> out;
  std::set_union(links_.begin(), links_.end(), other.links_.begin(), other.links_.end(),
                 std::back_inserter(out));
  FeedbackPattern result;
  result.links_ = std::move(out);
  return result;
}

bool FeedbackPattern::is_subset_of(const FeedbackPattern& other) const {
  return std::includes(other.links_.begin(), other.links_.end(), links_.begin(), links_.end());
}

void check_pattern(const FeedbackPattern& pattern, int m, int p) {
  for (const Link& l : pattern.links()) {
    if (l.input < 0 || l.input >= m || l.output < 0 || l.output >= p) {
      throw DimensionError("feedback link (" + std::to_string(l.input + 1) + ", " +
                           std::to_string(l.output + 1) + ") outside " + std::to_string(m) +
                           " inputs x " + std::to_string(p) + " outputs");
    }
  }
}

Cost cost_of(const FeedbackPattern& pattern, const CostMatrix& costs) {
  check_pattern(pattern, costs.rows(), costs.cols());
  Cost total;
  for (const Link& l : pattern.links()) total += costs.at(l.input, l.output);
  return total;
}

void validate(const SetCoverInstance& inst) {
  if (inst.universe_size < 1) throw DimensionError("set cover universe must be nonempty");
  if (inst.sets.size() != inst.weights.size()) {
    throw DimensionError("set cover has " + std::to_string(inst.sets.size()) + " sets but " +
                         std::to_string(inst.weights.size()) + " weights");
  }
  std::vector<bool> covered(inst.universe_size, false);
  for (std::size_t s = 0; s < inst.sets.size(); ++s) {
    if (inst.sets[s].empty()) throw DimensionError("set " + std::to_string(s + 1) + " is empty");
    for (int e : inst.sets[s]) {
      if (e < 0 || e >= inst.universe_size) {
        throw DimensionError("set " + std::to_string(s + 1) + " contains element " +
                             std::to_string(e + 1) + " outside [1, " +
                             std::to_string(inst.universe_size) + "]");
      }
      covered[e] = true;
    }
  }
  for (int e = 0; e < inst.universe_size; ++e) {
    if (!covered[e]) throw DimensionError("element " + std::to_string(e + 1) + " is in no set");
  }
}

}  // namespace fbsel
