#pragma once

#include <cstddef>
#include <optional>

#include "hunt/graph.hpp"
#include "hunt/strategy.hpp"

namespace hunt {

struct OracleVerdict {
  bool win = false;
  /// First winning sequence in enumeration order.
  std::optional<Strategy> strategy;
  std::size_t sequences_checked = 0;
};

/// Brute force over every sequence of `limit` shot sets of size <= budget
/// (any vertices, not just the reachable frontier), each checked with
/// verify_strategy. Independent of the territory search in solver.hpp.
///
/// Throws CapExceeded when (number of shot sets)^limit exceeds `cap`.
OracleVerdict strategy_enum_oracle(const Graph& g, std::size_t budget, std::size_t limit,
                                   const VertexSet& start, std::size_t cap = 20'000'000);

}  // namespace hunt
