#include "hunt/layered.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hunt/errors.hpp"
#include "hunt/flow.hpp"

namespace hunt {

LayeredGraph build_layered_graph(const Graph& g, std::size_t l, std::size_t cap) {
  if (l == 0) throw std::invalid_argument("layered graph needs l >= 1");
  const std::size_t n = g.order();
  if (n != 0 && l > cap / n) {
    throw CapExceeded("layered graph would have more than " + std::to_string(cap) +
                      " vertex copies");
  }
  LayeredGraph lg;
  lg.base_order = n;
  lg.layers = l;
  for (Vertex v = 0; v < n; ++v) lg.arcs.emplace_back(LayeredGraph::kSource, lg.node(v, 1));
  const auto edges = g.edges();
  for (std::size_t i = 1; i < l; ++i) {
    for (const Edge& e : edges) {
      lg.arcs.emplace_back(lg.node(e.u, i), lg.node(e.v, i + 1));
      if (e.u != e.v) lg.arcs.emplace_back(lg.node(e.v, i), lg.node(e.u, i + 1));
    }
  }
  for (Vertex v = 0; v < n; ++v) lg.arcs.emplace_back(lg.node(v, l), LayeredGraph::kSink);
  return lg;
}

Strategy LayeredCut::as_strategy() const {
  std::vector<VertexSet> rounds(layers, VertexSet(base_order));
  for (const TimedShot& s : shots) rounds[s.round - 1].insert(s.vertex);
  std::size_t budget = 0;
  for (const auto& r : rounds) budget = std::max(budget, r.size());
  return Strategy(base_order, budget, std::move(rounds));
}

LayeredCut layered_min_cut(const Graph& g, std::size_t l, std::size_t cap) {
  const LayeredGraph lg = build_layered_graph(g, l, cap);
  const std::size_t copies = lg.node_count() - 2;
  // Copy c splits into in-node 2+c and out-node 2+copies+c.
  auto in_node = [](std::size_t id) { return id; };
  auto out_node = [&](std::size_t id) {
    return id < 2 ? id : id + copies;
  };
  const FlowNetwork::Capacity unbounded = static_cast<FlowNetwork::Capacity>(copies) + 1;

  FlowNetwork net(2 + 2 * copies);
  std::vector<std::size_t> split_arcs(copies);
  for (std::size_t c = 0; c < copies; ++c) split_arcs[c] = net.add_arc(2 + c, 2 + copies + c, 1);
  for (const auto& [from, to] : lg.arcs) net.add_arc(out_node(from), in_node(to), unbounded);

  LayeredCut cut;
  cut.layers = l;
  cut.base_order = g.order();
  cut.value = static_cast<std::size_t>(net.max_flow(LayeredGraph::kSource, LayeredGraph::kSink));
  const auto reach = net.source_side(LayeredGraph::kSource);
  for (std::size_t c = 0; c < copies; ++c) {
    if (reach[2 + c] && !reach[2 + copies + c]) {
      cut.shots.push_back({static_cast<Vertex>(c % g.order()), c / g.order() + 1});
    }
  }
  if (cut.shots.size() != cut.value) {
    throw std::logic_error("min cut size disagrees with max flow value");
  }
  return cut;
}

}  // namespace hunt
