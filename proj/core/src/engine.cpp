#include "hunt/engine.hpp"

#include <stdexcept>

namespace hunt {

namespace {

void require_universe(const Graph& g, const VertexSet& s, const char* what) {
  if (s.universe() != g.order()) {
    throw std::invalid_argument(std::string(what) + " universe " +
                                std::to_string(s.universe()) +
                                " does not match graph order " +
                                std::to_string(g.order()));
  }
}

}  // namespace

VertexSet step(const Graph& g, const VertexSet& r, const VertexSet& w) {
  require_universe(g, r, "territory");
  require_universe(g, w, "shot set");
  return neighborhood(g, r) - w;
}

Verification verify_strategy(const Graph& g, const VertexSet& start, const Strategy& strat) {
  require_universe(g, start, "start set");
  if (strat.universe() != g.order()) {
    throw std::invalid_argument("strategy universe does not match graph order");
  }
  TerritoryTrace trace{start, {}};
  if (start.empty()) return Win{std::move(trace)};
  if (strat.empty()) throw std::invalid_argument("cannot verify an empty strategy");

  trace.territories.push_back(start - strat.shot(0));
  for (std::size_t t = 1; t < strat.length() && !trace.territories.back().empty(); ++t) {
    trace.territories.push_back(step(g, trace.territories.back(), strat.shot(t)));
  }
  if (trace.territories.back().empty()) return Win{std::move(trace)};

  // Each territory is exactly the set of endpoints of surviving walks, so a
  // backward pass always finds a predecessor.
  const auto& layers = trace.territories;
  std::vector<Vertex> walk(layers.size());
  walk.back() = *layers.back().first();
  for (std::size_t t = layers.size() - 1; t > 0; --t) {
    auto pred = (layers[t - 1] & g.neighbors(walk[t])).first();
    if (!pred) throw std::logic_error("territory trace is inconsistent");
    walk[t - 1] = *pred;
  }
  return Lose{std::move(trace), EscapeWalk{std::move(walk)}};
}

bool is_escape_walk(const Graph& g, const VertexSet& start, const Strategy& strat,
                    const EscapeWalk& walk) {
  const auto& w = walk.walk;
  if (w.empty() || w.size() > strat.length()) return false;
  if (!start.contains(w.front())) return false;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (w[t] >= g.order() || strat.shot(t).contains(w[t])) return false;
    if (t + 1 < w.size() && !g.has_edge(w[t], w[t + 1])) return false;
  }
  return true;
}

}  // namespace hunt
