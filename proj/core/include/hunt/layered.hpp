#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hunt/graph.hpp"
#include "hunt/strategy.hpp"

namespace hunt {

/// L(G, l): copies v^1..v^l of every vertex plus a source and a sink.
/// Node ids: source 0, sink 1, v^i at 2 + (i-1)*n + v.
/// Arcs: source -> v^1, v^l -> sink, and u^i -> v^{i+1} plus v^i -> u^{i+1}
/// for every edge uv (a loop gives the single arc v^i -> v^{i+1}).
struct LayeredGraph {
  static constexpr std::size_t kSource = 0;
  static constexpr std::size_t kSink = 1;

  std::size_t base_order = 0;
  std::size_t layers = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;

  std::size_t node_count() const noexcept { return 2 + base_order * layers; }
  /// layer is 1-based.
  std::size_t node(Vertex v, std::size_t layer) const { return 2 + (layer - 1) * base_order + v; }
};

/// Refuses (CapExceeded) when n * l exceeds `cap`.
LayeredGraph build_layered_graph(const Graph& g, std::size_t l, std::size_t cap = 1'000'000);

/// A shot at vertex `vertex` in round `round` (1-based).
struct TimedShot {
  Vertex vertex;
  std::size_t round;
  friend auto operator<=>(const TimedShot&, const TimedShot&) = default;
};

struct LayeredCut {
  /// ca(G, l): minimum s-t vertex cut of L(G, l).
  std::size_t value = 0;
  std::size_t layers = 0;
  std::size_t base_order = 0;
  /// Sorted by round, then vertex.
  std::vector<TimedShot> shots;

  /// W_i = vertices cut in layer i. Wins within l rounds from start V;
  /// budget is the largest layer.
  Strategy as_strategy() const;
};

/// Min vertex cut of L(G, l) by unit-capacity node splitting and Dinic max
/// flow; by Menger the flow value equals the cut size.
LayeredCut layered_min_cut(const Graph& g, std::size_t l, std::size_t cap = 1'000'000);

}  // namespace hunt
