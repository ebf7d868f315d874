#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hunt/graph.hpp"

namespace hunt {

struct Matching {
  std::vector<Edge> edges;
  std::size_t size() const noexcept { return edges.size(); }
};

/// Side (0 or 1) of every vertex, or nullopt if g has a loop or an odd cycle.
std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g);
bool is_bipartite(const Graph& g);

/// Maximum matching by augmenting paths. Throws std::invalid_argument unless
/// g is bipartite and loopless.
Matching max_matching_bipartite(const Graph& g);

/// Maximal matching by a single greedy pass; at least half the maximum.
Matching greedy_matching(const Graph& g);

/// Exact maximum matching of any graph by memoized search over vertex
/// subsets; loops never match. Throws CapExceeded above `cap` vertices.
Matching max_matching_exact(const Graph& g, std::size_t cap = 32);

/// Exact minimum vertex cover (a loop at v forces v) by branch and bound.
/// Throws CapExceeded above `cap` vertices.
VertexSet min_vertex_cover_exact(const Graph& g, std::size_t cap = 64);

}  // namespace hunt
