#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "hunt/graph.hpp"
#include "hunt/strategy.hpp"

namespace hunt {

/// R_1 = start \ W_1 and R_t = N(R_{t-1}) \ W_t.
struct TerritoryTrace {
  VertexSet start;
  std::vector<VertexSet> territories;
};

/// Rabbit walk v_1..v_T: v_1 in start, v_t not in W_t, consecutive vertices
/// adjacent.
struct EscapeWalk {
  std::vector<Vertex> walk;
};

/// The trace ends at the first empty territory.
struct Win {
  TerritoryTrace trace;
  std::size_t rounds() const noexcept { return trace.territories.size(); }
};

struct Lose {
  TerritoryTrace trace;
  EscapeWalk escape;
};

using Verification = std::variant<Win, Lose>;

inline bool is_win(const Verification& v) noexcept {
  return std::holds_alternative<Win>(v);
}

/// One round of territory evolution: N(r) \ w.
VertexSet step(const Graph& g, const VertexSet& r, const VertexSet& w);

/// Plays the strategy against every rabbit starting in `start`.
///
/// An empty start set wins immediately with an empty trace. Otherwise the
/// strategy must be nonempty. On a loss the escape walk is rebuilt backwards
/// through the territories, always taking the lowest-indexed predecessor.
Verification verify_strategy(const Graph& g, const VertexSet& start, const Strategy& strat);

/// Independent check of the three escape-walk conditions against the first
/// walk.size() shots.
bool is_escape_walk(const Graph& g, const VertexSet& start, const Strategy& strat,
                    const EscapeWalk& walk);

}  // namespace hunt
