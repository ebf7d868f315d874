#include "hunt/matching.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hunt/errors.hpp"

namespace hunt {

using Mask = std::uint64_t;

std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::uint8_t unset = 2;
  std::vector<std::uint8_t> side(n, unset);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != unset) continue;
    side[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      bool ok = true;
      g.neighbors(v).for_each([&](Vertex w) {
        if (side[w] == unset) {
          side[w] = static_cast<std::uint8_t>(1 - side[v]);
          queue.push(w);
        } else if (side[w] == side[v]) {
          ok = false;
        }
      });
      if (!ok) return std::nullopt;
    }
  }
  return side;
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

namespace {

class AugmentingPaths {
 public:
  AugmentingPaths(const Graph& g, const std::vector<std::uint8_t>& side)
      : g_(g), side_(side), partner_(g.order(), kNone), seen_(g.order(), 0) {}

  Matching run() {
    for (Vertex u = 0; u < g_.order(); ++u) {
      if (side_[u] != 0) continue;
      ++stamp_;
      augment(u);
    }
    Matching m;
    for (Vertex u = 0; u < g_.order(); ++u) {
      if (side_[u] == 0 && partner_[u] != kNone) {
        Vertex v = partner_[u];
        m.edges.push_back({std::min(u, v), std::max(u, v)});
      }
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
  }

 private:
  static constexpr Vertex kNone = ~Vertex{0};

  bool augment(Vertex u) {
    for (auto w = g_.neighbors(u).first(); w; w = g_.neighbors(u).next(*w)) {
      if (seen_[*w] == stamp_) continue;
      seen_[*w] = stamp_;
      if (partner_[*w] == kNone || augment(partner_[*w])) {
        partner_[*w] = u;
        partner_[u] = *w;
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  const std::vector<std::uint8_t>& side_;
  std::vector<Vertex> partner_;
  std::vector<std::size_t> seen_;
  std::size_t stamp_ = 0;
};

}  // namespace

Matching max_matching_bipartite(const Graph& g) {
  auto side = two_coloring(g);
  if (!side) throw std::invalid_argument("graph is not bipartite (odd cycle or loop)");
  return AugmentingPaths(g, *side).run();
}

Matching greedy_matching(const Graph& g) {
  Matching m;
  std::vector<bool> used(g.order(), false);
  for (const Edge& e : g.edges()) {
    if (e.u != e.v && !used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = true;
      m.edges.push_back(e);
    }
  }
  return m;
}

namespace {

class ExactMatcher {
 public:
  explicit ExactMatcher(const Graph& g) : nbr_(neighbor_masks(g)) {
    for (Vertex v = 0; v < nbr_.size(); ++v) nbr_[v] &= ~(Mask{1} << v);
  }

  Matching run(Mask all) {
    best(all);
    Matching m;
    for (Mask at = all; at != 0;) {
      const auto v = static_cast<Vertex>(std::countr_zero(at));
      const Mask rest = at & ~(Mask{1} << v);
      const auto choice = memo_.at(at).second;
      if (choice == 0) {
        at = rest;
      } else {
        const Vertex u = choice - 1;
        m.edges.push_back({std::min(u, v), std::max(u, v)});
        at = rest & ~(Mask{1} << u);
      }
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
  }

 private:
  // Best matching within `alive`; records whether its lowest vertex stays
  // single (0) or pairs with vertex choice-1.
  std::uint32_t best(Mask alive) {
    if (alive == 0) return 0;
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second.first;
    const auto v = static_cast<std::size_t>(std::countr_zero(alive));
    const Mask rest = alive & ~(Mask{1} << v);
    std::uint32_t value = best(rest);
    Vertex choice = 0;
    for (Mask cand = nbr_[v] & rest; cand != 0; cand &= cand - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(cand));
      const std::uint32_t with = 1 + best(rest & ~(Mask{1} << u));
      if (with > value) {
        value = with;
        choice = u + 1;
      }
    }
    memo_[alive] = {value, choice};
    return value;
  }

  std::vector<Mask> nbr_;
  std::unordered_map<Mask, std::pair<std::uint32_t, Vertex>> memo_;
};

class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g) : n_(g.order()), nbr_(neighbor_masks(g)) {}

  Mask run() {
    Mask forced = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if ((nbr_[v] >> v) & 1U) forced |= Mask{1} << v;
    }
    Mask alive = (n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1) & ~forced;
    // Greedy 2-approximation as the initial incumbent.
    best_ = forced;
    for (std::size_t v = 0; v < n_; ++v) {
      if (!((alive >> v) & 1U)) continue;
      Mask open = nbr_[v] & alive & ~best_;
      if (open != 0 && !((best_ >> v) & 1U)) {
        const auto u = static_cast<std::size_t>(std::countr_zero(open));
        best_ |= (Mask{1} << v) | (Mask{1} << u);
      }
    }
    best_size_ = static_cast<std::size_t>(std::popcount(best_));
    search(alive, forced);
    return best_;
  }

 private:
  std::size_t degree(std::size_t v, Mask alive) const {
    return static_cast<std::size_t>(std::popcount(nbr_[v] & alive));
  }

  // Disjoint edges inside `alive`: each needs its own cover vertex.
  std::size_t matching_bound(Mask alive) const {
    std::size_t count = 0;
    for (Mask left = alive; left != 0;) {
      const auto v = static_cast<std::size_t>(std::countr_zero(left));
      left &= ~(Mask{1} << v);
      Mask open = nbr_[v] & left;
      if (open != 0) {
        left &= ~(open & (~open + 1));
        ++count;
      }
    }
    return count;
  }

  void search(Mask alive, Mask chosen) {
    const auto size = static_cast<std::size_t>(std::popcount(chosen));
    if (size + matching_bound(alive) >= best_size_) return;
    std::size_t pick = n_;
    std::size_t pick_deg = 0;
    for (Mask left = alive; left != 0; left &= left - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(left));
      const std::size_t d = degree(v, alive);
      if (d == 1) {
        // Taking the lone neighbor is never worse.
        const auto u = static_cast<std::size_t>(std::countr_zero(nbr_[v] & alive));
        search(alive & ~(Mask{1} << v) & ~(Mask{1} << u), chosen | (Mask{1} << u));
        return;
      }
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    if (pick_deg == 0) {
      best_ = chosen;
      best_size_ = size;
      return;
    }
    const Mask bit = Mask{1} << pick;
    search(alive & ~bit, chosen | bit);
    const Mask around = nbr_[pick] & alive;
    search(alive & ~bit & ~around, chosen | around);
  }

  std::size_t n_;
  std::vector<Mask> nbr_;
  Mask best_ = 0;
  std::size_t best_size_ = 0;
};

}  // namespace

Matching max_matching_exact(const Graph& g, std::size_t cap) {
  if (g.order() > cap || g.order() > 64) {
    throw CapExceeded("exact matching limited to " + std::to_string(std::min<std::size_t>(cap, 64)) +
                      " vertices");
  }
  if (g.order() == 0) return {};
  const Mask all = g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
  return ExactMatcher(g).run(all);
}

VertexSet min_vertex_cover_exact(const Graph& g, std::size_t cap) {
  if (g.order() > cap || g.order() > 64) {
    throw CapExceeded("exact vertex cover limited to " +
                      std::to_string(std::min<std::size_t>(cap, 64)) + " vertices");
  }
  return VertexSet::from_mask(g.order(), CoverSearch(g).run());
}

}  // namespace hunt
