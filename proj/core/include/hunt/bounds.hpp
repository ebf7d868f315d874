#pragma once

#include <cstddef>
#include <optional>

#include "hunt/graph.hpp"

namespace hunt {

/// h(G, 2) = min over S of max(|S|, |N(V \ S)|), by exhaustive search.
/// Throws CapExceeded above `cap` vertices.
std::size_t h2_bruteforce(const Graph& g, std::size_t cap = 24);

/// A value known to lie in [lower, upper]; exact when the two coincide.
struct Bracket {
  std::size_t lower = 0;
  std::size_t upper = 0;

  bool exact() const noexcept { return lower == upper; }
  static Bracket of(std::size_t v) { return {v, v}; }
};

struct BoundsReport {
  std::size_t order = 0;
  Bracket matching;        // M(G)
  Bracket vertex_cover;    // VC(G)
  std::size_t double_cover_vc = 0;  // VC(B_G) = M(B_G)
  std::size_t degeneracy = 0;
  Bracket h2;              // h(G, 2)
  bool bipartite = false;
};

struct BoundsCaps {
  /// Exact general matching up to this order (bipartite graphs are always exact).
  std::size_t matching = 32;
  std::size_t vertex_cover = 64;
  std::size_t h2 = 22;
};

/// Computes the matching / vertex cover quantities of the chain
///   ceil(VC/2) <= M <= ceil(VC(B_G)/2) <= h(G,2) <= VC <= 2M <= VC(B_G).
/// Above a cap, a quantity degrades to a bracket: greedy matching bounds for
/// M and VC, and the chain's own bounds for h(G, 2).
BoundsReport bounds_chain(const Graph& g, const BoundsCaps& caps = BoundsCaps{});

/// Checks every link of the chain. Only meaningful when the report is exact;
/// returns nullopt otherwise.
std::optional<bool> chain_holds(const BoundsReport& r);

}  // namespace hunt
