#include "hunt/separators.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hunt/errors.hpp"

namespace hunt {

namespace {

using Mask = std::uint64_t;

std::size_t count(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

class ComponentSplitter {
 public:
  explicit ComponentSplitter(const Graph& g) : n_(g.order()), nbr_(neighbor_masks(g)) {
    for (std::size_t v = 0; v < n_; ++v) {
      if ((nbr_[v] >> v) & 1U) loops_ |= Mask{1} << v;
      nbr_[v] &= ~(Mask{1} << v);
    }
  }

  Mask all() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }
  Mask loops() const { return loops_; }

  std::vector<Mask> components(Mask alive) const {
    std::vector<Mask> out;
    while (alive != 0) {
      Mask comp = alive & (~alive + 1);
      Mask frontier = comp;
      while (frontier != 0) {
        Mask grown = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) grown |= nbr_[std::countr_zero(f)];
        frontier = grown & alive & ~comp;
        comp |= frontier;
      }
      out.push_back(comp);
      alive &= ~comp;
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<Mask> nbr_;
  Mask loops_ = 0;
};

// Subset sum with reconstruction: reach[i][s] says whether the first i
// items can pick exactly s.
class SubsetSum {
 public:
  SubsetSum(const std::vector<Mask>& items, std::size_t total) : items_(items) {
    reach_.assign(items.size() + 1, std::vector<bool>(total + 1, false));
    reach_[0][0] = true;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const std::size_t w = count(items[i]);
      for (std::size_t s = 0; s <= total; ++s) {
        if (!reach_[i][s]) continue;
        reach_[i + 1][s] = true;
        if (s + w <= total) reach_[i + 1][s + w] = true;
      }
    }
  }

  bool reachable(std::size_t s) const { return reach_.back()[s]; }

  Mask pick(std::size_t s) const {
    Mask chosen = 0;
    for (std::size_t i = items_.size(); i > 0; --i) {
      if (reach_[i - 1][s]) continue;
      chosen |= items_[i - 1];
      s -= count(items_[i - 1]);
    }
    return chosen;
  }

 private:
  const std::vector<Mask>& items_;
  std::vector<std::vector<bool>> reach_;
};

void check_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.order() > cap || g.order() > 63) {
    throw CapExceeded(std::string(what) + " limited to " + std::to_string(std::min<std::size_t>(cap, 63)) +
                      " vertices");
  }
}

SeparatorPartition to_partition(const Graph& g, Mask a, Mask b, Mask c, std::optional<Mask> d,
                                long objective) {
  const std::size_t n = g.order();
  SeparatorPartition p{VertexSet::from_mask(n, a), VertexSet::from_mask(n, b),
                       VertexSet::from_mask(n, c), std::nullopt, objective};
  if (d) p.d = VertexSet::from_mask(n, *d);
  return p;
}

}  // namespace

SeparatorPartition evb_oracle(const Graph& g, std::size_t cap) {
  check_cap(g, cap, "evb_oracle");
  const ComponentSplitter split(g);
  const Mask all = split.all();
  long best = static_cast<long>(g.order()) + 1;
  Mask best_a = 0, best_b = 0, best_c = all;
  for (Mask c = 0;; ++c) {
    const auto size = static_cast<long>(count(c));
    if (size < best && (g.order() - count(c)) % 2 == 0) {
      const auto comps = split.components(all & ~c);
      const std::size_t half = (g.order() - count(c)) / 2;
      SubsetSum sums(comps, 2 * half);
      if (sums.reachable(half)) {
        best = size;
        best_c = c;
        best_a = sums.pick(half);
        best_b = all & ~c & ~best_a;
      }
    }
    if (c == all) break;
  }
  return to_partition(g, best_a, best_b, best_c, std::nullopt, best);
}

SeparatorPartition bss_oracle(const Graph& g, std::size_t cap) {
  check_cap(g, cap, "bss_oracle");
  const ComponentSplitter split(g);
  const Mask all = split.all();
  long best = static_cast<long>(g.order()) + 1;
  Mask best_a = 0, best_b = 0, best_c = all, best_d = 0;
  for (Mask c = 0;; ++c) {
    const auto comps = split.components(all & ~c);
    std::vector<Mask> big;
    std::vector<Mask> singles;
    std::size_t big_total = 0;
    for (Mask comp : comps) {
      if (count(comp) == 1 && (comp & split.loops()) == 0) {
        singles.push_back(comp);
      } else {
        big.push_back(comp);
        big_total += count(comp);
      }
    }
    const std::size_t q = singles.size();
    // |C| - |D| with |D| = q - d, where d is the imbalance of the big parts.
    if (static_cast<long>(count(c)) - static_cast<long>(q) < best) {
      SubsetSum sums(big, big_total);
      std::optional<std::size_t> best_sa;
      std::size_t best_d_gap = q + 1;
      for (std::size_t sa = 0; 2 * sa <= big_total; ++sa) {
        if (!sums.reachable(sa)) continue;
        const std::size_t gap = big_total - 2 * sa;
        if (gap <= q && gap < best_d_gap) {
          best_d_gap = gap;
          best_sa = sa;
        }
      }
      if (best_sa) {
        const long objective = static_cast<long>(count(c)) - static_cast<long>(q - best_d_gap);
        if (objective < best) {
          best = objective;
          best_c = c;
          best_a = sums.pick(*best_sa);
          best_b = 0;
          for (Mask comp : big) {
            if ((comp & best_a) == 0) best_b |= comp;
          }
          // The lighter side A takes `gap` singletons; the rest form D.
          best_d = 0;
          for (std::size_t i = 0; i < q; ++i) {
            if (i < best_d_gap) {
              best_a |= singles[i];
            } else {
              best_d |= singles[i];
            }
          }
        }
      }
    }
    if (c == all) break;
  }
  return to_partition(g, best_a, best_b, best_c, best_d, best);
}

namespace {

bool base_partition_ok(const Graph& g, const SeparatorPartition& p) {
  const std::size_t n = g.order();
  for (const VertexSet* s : {&p.a, &p.b, &p.c}) {
    if (s->universe() != n) return false;
  }
  if (p.a.size() != p.b.size()) return false;
  VertexSet seen = p.a | p.b | p.c;
  std::size_t total = p.a.size() + p.b.size() + p.c.size();
  if (p.d) {
    if (p.d->universe() != n) return false;
    seen |= *p.d;
    total += p.d->size();
  }
  if (total != n || seen.size() != n) return false;
  return !neighborhood(g, p.a).intersects(p.b);
}

}  // namespace

bool is_evb_partition(const Graph& g, const SeparatorPartition& p) {
  return !p.d && base_partition_ok(g, p) && p.objective == static_cast<long>(p.c.size());
}

bool is_bss_partition(const Graph& g, const SeparatorPartition& p) {
  if (!p.d || !base_partition_ok(g, p)) return false;
  // N(D) ⊆ C also rules out loops in D and edges from D to A, B or D.
  if (!neighborhood(g, *p.d).is_subset_of(p.c)) return false;
  return p.objective == static_cast<long>(p.c.size()) - static_cast<long>(p.d->size());
}

}  // namespace hunt
