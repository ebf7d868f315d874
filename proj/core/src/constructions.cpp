#include "hunt/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace hunt {

void Layout::add(std::string name, Vertex begin, Vertex end) {
  if (end < begin) throw std::invalid_argument("block '" + name + "' has end before begin");
  if (contains(name)) throw std::invalid_argument("duplicate block '" + name + "'");
  blocks_.push_back({std::move(name), begin, end});
}

const Block& Layout::block(std::string_view name) const {
  auto it = std::find_if(blocks_.begin(), blocks_.end(),
                         [&](const Block& b) { return b.name == name; });
  if (it == blocks_.end()) throw std::out_of_range("no block named '" + std::string(name) + "'");
  return *it;
}

bool Layout::contains(std::string_view name) const {
  return std::any_of(blocks_.begin(), blocks_.end(),
                     [&](const Block& b) { return b.name == name; });
}

VertexSet Layout::members(std::size_t universe, std::string_view name) const {
  const Block& b = block(name);
  VertexSet s(universe);
  for (Vertex v = b.begin; v < b.end; ++v) s.insert(v);
  return s;
}

VertexSet Layout::members(std::size_t universe,
                          std::initializer_list<std::string_view> names) const {
  VertexSet s(universe);
  for (std::string_view name : names) s |= members(universe, name);
  return s;
}

Graph tensor_k2(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) {
      out.push_back({e.u, n + e.u});
    } else {
      out.push_back({e.u, n + e.v});
      out.push_back({e.v, n + e.u});
    }
  }
  return build_graph(2 * g.order(), out);
}

Graph tensor_loop_clique(const Graph& g, std::size_t p) {
  if (p < 2) throw std::invalid_argument("loop-clique tensor needs p >= 2");
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    for (Vertex i = 0; i < p; ++i) {
      for (Vertex j = 0; j < p; ++j) {
        Vertex a = i * n + e.u;
        Vertex b = j * n + e.v;
        // A loop yields each unordered pair once.
        if (e.u == e.v && j < i) continue;
        out.push_back({a, b});
      }
    }
  }
  return build_graph(p * g.order(), out);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto shift = static_cast<Vertex>(g.order());
  std::vector<Edge> out = g.edges();
  for (const Edge& e : h.edges()) out.push_back({e.u + shift, e.v + shift});
  return build_graph(g.order() + h.order(), out);
}

Graph join(const Graph& g, const Graph& h) {
  const auto shift = static_cast<Vertex>(g.order());
  std::vector<Edge> out = g.edges();
  for (const Edge& e : h.edges()) out.push_back({e.u + shift, e.v + shift});
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < h.order(); ++v) out.push_back({u, v + shift});
  }
  return build_graph(g.order() + h.order(), out);
}

Graph clique_with_tail(std::size_t a, std::size_t p) {
  if (p < 2) throw std::invalid_argument("clique_with_tail needs a path of at least 2 vertices");
  std::vector<Edge> out;
  for (Vertex u = 0; u <= a; ++u) {
    for (Vertex v = u; v <= a; ++v) out.push_back({u, v});
  }
  Vertex prev = 0;
  for (Vertex v = static_cast<Vertex>(a + 1); v < a + p; ++v) {
    out.push_back({prev, v});
    prev = v;
  }
  return build_graph(a + p, out);
}

Graph clique_blowup(const Graph& g, std::size_t m) {
  if (m == 0) throw std::invalid_argument("clique_blowup needs M >= 1");
  if (g.order() != 0 && m > (std::size_t{1} << 20) / g.order()) {
    throw std::length_error("clique_blowup result too large");
  }
  const auto mm = static_cast<Vertex>(m);
  std::vector<Edge> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex i = 0; i < mm; ++i) {
      for (Vertex j = i + 1; j < mm; ++j) out.push_back({v * mm + i, v * mm + j});
    }
  }
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    for (Vertex i = 0; i < mm; ++i) {
      for (Vertex j = 0; j < mm; ++j) out.push_back({e.u * mm + i, e.v * mm + j});
    }
  }
  return build_graph(g.order() * m, out);
}

}  // namespace hunt
