#pragma once

#include <cstdint>
#include <random>

#include "fbsel/model.hpp"

namespace fbsel {

/// Portable draws on top of std::mt19937_64; the distribution helpers in
/// <random> are implementation-defined, these are not.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  /// Uniform double in [0, 1).
  double uniform01();
  bool chance(double probability) { return uniform01() < probability; }

private:
  std::mt19937_64 engine_;
};

/// Parameters of a random system whose SCC condensation is a line.
struct LineParams {
  int scc_count = 4;
  int scc_size_min = 1;
  int scc_size_max = 3;
  int inputs = 2;
  int outputs = 2;
  double input_density = 0.3;
  double output_density = 0.3;
  int cost_min = 1;
  int cost_max = 100;
  /// With a perfect matching every state gets a state-only cycle cover;
  /// without one the first SCC is a lone state with no self-loop.
  bool perfect_matching = true;
  /// Probability of each forward edge skipping at least one SCC.
  double shortcut_density = 0.0;
  /// Probability of a cost entry being forbidden.
  double forbidden_density = 0.0;
  std::uint64_t seed = 0;
};

/// Line-DAG instance. Some input always actuates C_1 and some output always
/// senses C_l. State labels are shuffled.
Instance generate_line(const LineParams& params);

/// Single-input system with one source SCC, a perfect matching in B(A),
/// and a tree-like DAG below the source.
struct SingleInputParams {
  int scc_count = 5;
  int scc_size_max = 2;
  int outputs = 4;
  double output_density = 0.3;
  double extra_edge_density = 0.2;
  /// Hang every other SCC directly off the source.
  bool star = false;
  int cost_min = 1;
  int cost_max = 100;
  std::uint64_t seed = 0;
};

/// u_1 always actuates the source SCC and every sink SCC is sensed by at
/// least one output.
Instance generate_single_input(const SingleInputParams& params);

}  // namespace fbsel
