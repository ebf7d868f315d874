#include "hunt/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hunt {

namespace {

std::string pair_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

Graph build_graph(std::size_t n, const std::vector<Edge>& edges) {
  if (n > std::numeric_limits<Vertex>::max()) {
    throw std::invalid_argument("vertex count too large");
  }
  Graph g;
  g.adjacency_.assign(n, VertexSet(n));
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge " + pair_text(e) +
                                  " has an endpoint out of range for " +
                                  std::to_string(n) + " vertices");
    }
    if (g.adjacency_[e.u].contains(e.v)) {
      throw std::invalid_argument("duplicate edge " + pair_text(e));
    }
    g.adjacency_[e.u].insert(e.v);
    g.adjacency_[e.v].insert(e.u);
    ++g.edge_count_;
    if (e.u == e.v) ++g.loop_count_;
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (auto w = adjacency_[u].first(); w; w = adjacency_[u].next(*w)) {
      if (*w >= u) out.push_back({u, *w});
    }
  }
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw std::invalid_argument("vertex set universe mismatch with graph order");
  }
  VertexSet out(g.order());
  s.for_each([&](Vertex v) { out |= g.neighbors(v); });
  return out;
}

std::size_t degeneracy(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  std::size_t best = 0;
  for (std::size_t round = 0; round < n; ++round) {
    Vertex pick = 0;
    std::size_t pick_deg = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[v] && deg[v] < pick_deg) {
        pick = v;
        pick_deg = deg[v];
      }
    }
    best = std::max(best, pick_deg);
    removed[pick] = true;
    g.neighbors(pick).for_each([&](Vertex w) {
      if (w != pick && !removed[w]) --deg[w];
    });
  }
  return best;
}

std::vector<std::size_t> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(n, unset);
  std::vector<Vertex> stack;
  std::size_t next_id = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != unset) continue;
    comp[s] = next_id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      g.neighbors(v).for_each([&](Vertex w) {
        if (comp[w] == unset) {
          comp[w] = next_id;
          stack.push_back(w);
        }
      });
    }
    ++next_id;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.order()) {
    throw std::invalid_argument("vertex set universe mismatch with graph order");
  }
  std::vector<Vertex> index(g.order(), 0);
  Vertex next = 0;
  keep.for_each([&](Vertex v) { index[v] = next++; });
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (keep.contains(e.u) && keep.contains(e.v)) {
      edges.push_back({index[e.u], index[e.v]});
    }
  }
  return build_graph(next, edges);
}

std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
  if (g.order() > 64) {
    throw std::invalid_argument("neighbor masks require at most 64 vertices");
  }
  std::vector<std::uint64_t> masks(g.order());
  for (Vertex v = 0; v < g.order(); ++v) masks[v] = g.neighbors(v).to_mask();
  return masks;
}

}  // namespace hunt
