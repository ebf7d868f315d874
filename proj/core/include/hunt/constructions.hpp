#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "hunt/graph.hpp"

namespace hunt {

/// Contiguous vertex range [begin, end) carrying a name.
struct Block {
  std::string name;
  Vertex begin = 0;
  Vertex end = 0;

  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const Block&, const Block&) = default;
};

/// Ordered block map of a generated graph. Block names are unique.
class Layout {
 public:
  void add(std::string name, Vertex begin, Vertex end);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  /// Throws std::out_of_range for an unknown name.
  const Block& block(std::string_view name) const;
  bool contains(std::string_view name) const;
  /// Members of one block, or of several blocks joined.
  VertexSet members(std::size_t universe, std::string_view name) const;
  VertexSet members(std::size_t universe, std::initializer_list<std::string_view> names) const;

  friend bool operator==(const Layout&, const Layout&) = default;

 private:
  std::vector<Block> blocks_;
};

/// B_G: vertices v (index v) and v' (index n+v); each edge vw gives v'w and
/// w'v, a loop at v gives the single edge vv'. Loopless and bipartite.
Graph tensor_k2(const Graph& g);

/// C_G^p: copy i of v is i*n + v; each edge vw (loops included) yields
/// v^i w^j for every pair i, j. Requires p >= 2.
Graph tensor_loop_clique(const Graph& g, std::size_t p);

/// Vertices of g first, then those of h shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union plus every edge between the two sides.
Graph join(const Graph& g, const Graph& h);

/// G(a, p): K°_{a+1} on 0..a and a path 0, a+1, ..., a+p-1 hanging off
/// vertex 0. Requires p >= 2.
Graph clique_with_tail(std::size_t a, std::size_t p);

/// Every vertex v becomes a loopless clique on [v*M, (v+1)*M); adjacent
/// vertices' cliques are fully joined. Loops of g are dropped.
Graph clique_blowup(const Graph& g, std::size_t m);

}  // namespace hunt
