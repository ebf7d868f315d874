#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hunt/vertex_set.hpp"

namespace hunt {

/// Undirected edge; u == v denotes a loop.
struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected graph on vertices 0..n-1 with optional loops and no parallel
/// edges. Immutable once built; a loop at v puts v in N(v).
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return adjacency_.size(); }
  /// Number of edges, loops included.
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t loop_count() const noexcept { return loop_count_; }

  const VertexSet& neighbors(Vertex v) const { return adjacency_.at(v); }
  bool has_edge(Vertex u, Vertex v) const {
    return u < order() && adjacency_[u].contains(v);
  }
  bool has_loop(Vertex v) const { return has_edge(v, v); }
  /// Number of incident edges; a loop counts once.
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  VertexSet vertices() const { return VertexSet::full(order()); }
  /// Edges with u <= v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t n, const std::vector<Edge>& edges);

  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
  std::size_t loop_count_ = 0;
};

/// Throws std::invalid_argument on an out-of-range endpoint or a repeated
/// edge (in either orientation), naming the offending pair.
Graph build_graph(std::size_t n, const std::vector<Edge>& edges);

/// N(S): vertices with at least one neighbor in s.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

/// Max over induced subgraphs of the minimum degree, by min-degree peeling.
/// A loop adds one to its vertex's degree.
std::size_t degeneracy(const Graph& g);

/// Component index per vertex (loops ignored), numbered in order of the
/// smallest vertex of each component.
std::vector<std::size_t> connected_components(const Graph& g);
bool is_connected(const Graph& g);

Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Per-vertex neighbor bitmasks; requires order() <= 64.
std::vector<std::uint64_t> neighbor_masks(const Graph& g);

}  // namespace hunt
