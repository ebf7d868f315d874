#include "hunt/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "hunt/constructions.hpp"
#include "hunt/errors.hpp"
#include "hunt/matching.hpp"

namespace hunt {

std::size_t h2_bruteforce(const Graph& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap || n > 32) {
    throw CapExceeded("h2_bruteforce limited to " + std::to_string(std::min<std::size_t>(cap, 32)) +
                      " vertices");
  }
  const auto nbr = neighbor_masks(g);
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::size_t best = n;
  for (std::uint64_t s = 0; s <= all; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size >= best) continue;
    std::uint64_t around = 0;
    for (std::uint64_t rest = all & ~s; rest != 0; rest &= rest - 1) {
      around |= nbr[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    best = std::min(best, std::max(size, static_cast<std::size_t>(std::popcount(around))));
  }
  return best;
}

BoundsReport bounds_chain(const Graph& g, const BoundsCaps& caps) {
  BoundsReport r;
  r.order = g.order();
  r.bipartite = is_bipartite(g);
  r.degeneracy = degeneracy(g);
  r.double_cover_vc = max_matching_bipartite(tensor_k2(g)).size();

  const std::size_t greedy = greedy_matching(g).size();
  if (r.bipartite) {
    r.matching = Bracket::of(max_matching_bipartite(g).size());
  } else if (g.order() <= caps.matching) {
    r.matching = Bracket::of(max_matching_exact(g, caps.matching).size());
  } else {
    r.matching = {greedy, 2 * greedy};
  }

  if (r.bipartite) {
    r.vertex_cover = r.matching;
  } else if (g.order() <= caps.vertex_cover && g.order() <= 64) {
    r.vertex_cover = Bracket::of(min_vertex_cover_exact(g, caps.vertex_cover).size());
  } else {
    // Matched endpoints plus loop vertices always form a cover.
    r.vertex_cover = {std::max(greedy, (r.double_cover_vc + 1) / 2), 2 * greedy + g.loop_count()};
  }

  if (g.order() <= caps.h2) {
    r.h2 = Bracket::of(h2_bruteforce(g, caps.h2));
  } else {
    r.h2 = {(r.double_cover_vc + 1) / 2, r.vertex_cover.upper};
  }
  return r;
}

std::optional<bool> chain_holds(const BoundsReport& r) {
  if (!r.matching.exact() || !r.vertex_cover.exact() || !r.h2.exact()) return std::nullopt;
  const std::size_t m = r.matching.lower;
  const std::size_t vc = r.vertex_cover.lower;
  const std::size_t vcb = r.double_cover_vc;
  const std::size_t h2 = r.h2.lower;
  return (vc + 1) / 2 <= m && m <= (vcb + 1) / 2 && (vcb + 1) / 2 <= h2 && h2 <= vc &&
         vc <= 2 * m && 2 * m <= vcb;
}

}  // namespace hunt
