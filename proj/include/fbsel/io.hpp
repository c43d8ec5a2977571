#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fbsel/model.hpp"

namespace fbsel {

/// Malformed input file or argument. The message names the offending field.
class ParseError : public Error {
public:
  using Error::Error;
};

/// System file (JSON, 1-based indices):
///
///   {
///     "n": 2, "m": 1, "p": 1,
///     "a_edges": [[2, 1]],          // A_ij = *  (x_j -> x_i)
///     "b_edges": [[1, 1]],          // B_ij = *  (u_j -> x_i)
///     "c_edges": [[1, 2]],          // C_ij = *  (x_j -> y_i)
///     "cost": [[7]]                 // m rows of p entries, "inf" = forbidden
///   }
///
/// Duplicate edges are dropped with a warning; missing fields, out-of-range
/// indices and cost shape mismatches raise `ParseError`.
Instance parse_system(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string emit_system(const Instance& inst);

Instance load_system(const std::string& path, std::vector<std::string>* warnings = nullptr);

/// Set cover file:
///
///   { "universe_size": 5, "sets": [[1, 2], [2, 3]], "weights": [1, 1] }
SetCoverInstance parse_set_cover(std::string_view text);
std::string emit_set_cover(const SetCoverInstance& inst);
SetCoverInstance load_set_cover(const std::string& path);

/// Feedback links as "input:output" pairs, e.g. "1:1,1:3" (1-based). An
/// empty or blank string is the empty pattern.
FeedbackPattern parse_links(std::string_view text);
std::string format_links(const FeedbackPattern& k);

std::string read_file(const std::string& path);

}  // namespace fbsel
