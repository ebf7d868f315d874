#pragma once

#include <cstddef>
#include <optional>

#include "hunt/graph.hpp"

namespace hunt {

/// Partition of V into A, B, C (and D for the stable-separator variant)
/// with |A| = |B| and no A–B edge. For the stable variant D is stable, has
/// no edge to A or B, and N(D) ⊆ C.
struct SeparatorPartition {
  VertexSet a;
  VertexSet b;
  VertexSet c;
  std::optional<VertexSet> d;
  /// |C| for bisection, |C| - |D| for the stable variant.
  long objective = 0;
};

/// Exact vertex bisection: minimum |C|. Enumerates every C and splits the
/// components of G - C evenly by subset sum. Throws CapExceeded above `cap`.
SeparatorPartition evb_oracle(const Graph& g, std::size_t cap = 22);

/// Bisection stable separator: minimum |C| - |D|. Loopless vertices isolated
/// in G - C may go to D; the rest is balanced by subset sum. Throws
/// CapExceeded above `cap`.
SeparatorPartition bss_oracle(const Graph& g, std::size_t cap = 22);

/// Independent structural checks, including the objective value.
bool is_evb_partition(const Graph& g, const SeparatorPartition& p);
bool is_bss_partition(const Graph& g, const SeparatorPartition& p);

}  // namespace hunt
