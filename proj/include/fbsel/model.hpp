#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fbsel {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Index or shape mismatch between a system, a cost matrix and a pattern.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// An algorithm was called on an instance outside its supported class.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Extended nonnegative real: a finite value >= 0 or +infinity.
///
/// Addition saturates, so a sum containing a forbidden entry stays infinite.
class Cost {
public:
  constexpr Cost() = default;
  constexpr explicit Cost(double value) : value_(value) {
    if (!(value >= 0.0)) throw std::invalid_argument("cost must be a nonnegative number");
  }

  static constexpr Cost infinite() {
    Cost c;
    c.value_ = std::numeric_limits<double>::infinity();
    return c;
  }
  static constexpr Cost zero() { return Cost{}; }

  constexpr bool is_finite() const { return value_ != std::numeric_limits<double>::infinity(); }
  constexpr bool is_infinite() const { return !is_finite(); }
  constexpr double value() const { return value_; }

  constexpr Cost& operator+=(Cost other) {
    value_ += other.value_;
    return *this;
  }
  friend constexpr Cost operator+(Cost a, Cost b) { return a += b; }
  friend constexpr auto operator<=>(Cost a, Cost b) { return a.value_ <=> b.value_; }
  friend constexpr bool operator==(Cost a, Cost b) { return a.value_ == b.value_; }

  /// Scales a finite cost by a positive factor; infinity is preserved.
  Cost scaled(double factor) const;

  /// "inf" or the shortest decimal form of the value.
  std::string to_string() const;

private:
  double value_ = 0.0;
};

/// A nonzero position of a structured matrix, 0-based. Signed so that
/// out-of-range indices read from files survive until validation.
struct Entry {
  int row = 0;
  int col = 0;
  auto operator<=>(const Entry&) const = default;
};

/// Sparsity patterns of (A, B, C). Edge semantics:
///   a_edges (i, j): state x_j -> state x_i
///   b_edges (i, j): input u_j -> state x_i
///   c_edges (i, j): state x_j -> output y_i
struct StructuredSystem {
  int n = 0;
  int m = 0;
  int p = 0;
  std::vector<Entry> a_edges;
  std::vector<Entry> b_edges;
  std::vector<Entry> c_edges;

  bool operator==(const StructuredSystem&) const = default;
};

/// Outcome of `validate`. Violations break a type invariant; warnings
/// (duplicate edges) are repaired by `canonicalize`.
struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const StructuredSystem& sys);

/// Sorts every edge list and drops duplicates.
StructuredSystem canonicalize(StructuredSystem sys);

/// Validates, throws `DimensionError` listing every violation, and returns
/// the canonical form. Warnings are appended to `warnings` when given.
StructuredSystem make_system(StructuredSystem sys, std::vector<std::string>* warnings = nullptr);

/// m x p feedback cost matrix; entry (i, j) is the price of feeding output
/// j to input i.
class CostMatrix {
public:
  CostMatrix() = default;
  CostMatrix(int rows, int cols, Cost fill = Cost::zero());
  static CostMatrix from_rows(const std::vector<std::vector<Cost>>& rows, int cols_if_empty = 0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Cost at(int input, int output) const;
  void set(int input, int output, Cost value);

  /// Multiplies every finite entry by `factor` (> 0).
  CostMatrix scaled(double factor) const;

  bool operator==(const CostMatrix&) const = default;

private:
  void check(int input, int output) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cost> entries_;
};

/// Throws `DimensionError` if the cost matrix is not m x p for `sys`.
void check_dimensions(const StructuredSystem& sys, const CostMatrix& costs);

/// A system together with its feedback prices.
struct Instance {
  StructuredSystem sys;
  CostMatrix costs;

  bool operator==(const Instance&) const = default;
};

/// A feedback link y_output -> u_input, 0-based.
struct Link {
  int input = 0;
  int output = 0;
  auto operator<=>(const Link&) const = default;
};

/// Set of feedback links, stored sorted and unique.
class FeedbackPattern {
public:
  FeedbackPattern() = default;
  explicit FeedbackPattern(std::vector<Link> links);

  /// Every finite-cost link of the matrix.
  static FeedbackPattern full(const CostMatrix& costs);

  std::span<const Link> links() const { return links_; }
  std::size_t size() const { return links_.size(); }
  bool empty() const { return links_.empty(); }
  bool contains(Link link) const;
  void insert(Link link);

  FeedbackPattern united(const FeedbackPattern& other) const;
  bool is_subset_of(const FeedbackPattern& other) const;

  bool operator==(const FeedbackPattern&) const = default;

private:
  std::vector<Link> links_;
};

/// Throws `DimensionError` unless every link lies in [0, m) x [0, p).
void check_pattern(const FeedbackPattern& pattern, int m, int p);

/// Total price of a pattern; saturates to infinity on any forbidden link.
Cost cost_of(const FeedbackPattern& pattern, const CostMatrix& costs);

/// Weighted set cover instance over the universe {0, ..., universe_size - 1}.
struct SetCoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;
  std::vector<Cost> weights;

  bool operator==(const SetCoverInstance&) const = default;
};

/// Throws `DimensionError` when a set is empty, out of range, the weights
/// do not line up, or the union misses an element.
void validate(const SetCoverInstance& inst);

}  // namespace fbsel
