#include "graph_enum.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "hunt/families.hpp"

namespace hunt::testing {

Graph SmallGraph::to_graph() const {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u; v < n; ++v) {
      if ((rows[u] >> v) & 1U) edges.push_back({u, v});
    }
  }
  return build_graph(n, edges);
}

namespace {

std::uint64_t code_under(const SmallGraph& g, const std::vector<std::size_t>& order) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i; j < g.n; ++j) {
      code = (code << 1) | ((g.rows[order[i]] >> order[j]) & 1U);
    }
  }
  return code;
}

}  // namespace

std::uint64_t canonical_code(const SmallGraph& g) {
  const std::size_t n = g.n;
  std::vector<std::uint32_t> key(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint32_t loop = (g.rows[v] >> v) & 1U;
    key[v] = (loop << 8) | static_cast<std::uint32_t>(std::popcount(g.rows[v]));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return key[a] != key[b] ? key[a] > key[b] : a < b;
  });
  // Runs of equal keys; permute within each run.
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && key[order[j]] == key[order[i]]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  // Odometer over the runs: advance the last run, carrying into earlier ones.
  while (true) {
    best = std::min(best, code_under(g, order));
    std::size_t r = runs.size();
    while (r > 0) {
      auto [b, e] = runs[r - 1];
      if (std::next_permutation(order.begin() + static_cast<long>(b),
                                order.begin() + static_cast<long>(e))) {
        break;
      }
      --r;
    }
    if (r == 0) break;
  }
  return best;
}

std::vector<SmallGraph> graph_classes(std::size_t n, bool loops,
                                      const std::function<bool(const SmallGraph&)>& keep) {
  if (n == 0 || n > 8) throw std::invalid_argument("graph_classes supports 1..8 vertices");
  std::vector<SmallGraph> level;
  for (std::uint32_t loop = 0; loop <= (loops ? 1U : 0U); ++loop) {
    SmallGraph g{1, {loop}};
    if (!keep || keep(g)) level.push_back(g);
  }
  for (std::size_t size = 2; size <= n; ++size) {
    std::vector<SmallGraph> next;
    std::unordered_set<std::uint64_t> seen;
    const std::uint32_t fresh = 1U << (size - 1);
    for (const SmallGraph& base : level) {
      for (std::uint32_t mask = 0; mask < fresh; ++mask) {
        for (std::uint32_t loop = 0; loop <= (loops ? 1U : 0U); ++loop) {
          SmallGraph g{size, base.rows};
          g.rows.push_back(mask | (loop ? fresh : 0U));
          for (std::size_t v = 0; v + 1 < size; ++v) {
            if ((mask >> v) & 1U) g.rows[v] |= fresh;
          }
          if (keep && !keep(g)) continue;
          if (seen.insert(canonical_code(g)).second) next.push_back(std::move(g));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> all_graphs_up_to(std::size_t max_n, bool loops,
                                    const std::function<bool(const SmallGraph&)>& keep) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const auto& g : graph_classes(n, loops, keep)) out.push_back(g.to_graph());
  }
  return out;
}

bool small_bipartite(const SmallGraph& g) {
  std::vector<int> side(g.n, -1);
  for (std::size_t s = 0; s < g.n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < g.n; ++w) {
        if (!((g.rows[v] >> w) & 1U)) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph random_small_graph(std::uint64_t seed, std::size_t min_n, std::size_t max_n, double loop_p) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(min_n, max_n);
  std::uniform_real_distribution<double> density(0.15, 0.75);
  const std::size_t n = size(rng);
  const double p = density(rng);
  return random_graph(n, p, loop_p, rng());
}

bool reference_k_wins(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (n > 12) throw std::invalid_argument("reference search limited to 12 vertices");
  std::vector<std::uint32_t> nbr(n, 0);
  for (const Edge& e : g.edges()) {
    nbr[e.u] |= 1U << e.v;
    nbr[e.v] |= 1U << e.u;
  }
  std::vector<std::uint32_t> shots;
  for (std::uint32_t w = 0; w < (1U << n); ++w) {
    if (static_cast<std::size_t>(std::popcount(w)) <= k) shots.push_back(w);
  }
  const std::uint32_t full = (1U << n) - 1;
  std::vector<bool> seen(std::size_t{1} << n, false);
  std::vector<std::uint32_t> frontier;
  for (std::uint32_t w : shots) {
    const std::uint32_t r = full & ~w;
    if (!seen[r]) {
      seen[r] = true;
      frontier.push_back(r);
    }
  }
  while (!frontier.empty()) {
    if (seen[0]) return true;
    std::vector<std::uint32_t> next;
    for (std::uint32_t r : frontier) {
      std::uint32_t around = 0;
      for (std::uint32_t left = r; left != 0; left &= left - 1) around |= nbr[std::countr_zero(left)];
      for (std::uint32_t w : shots) {
        const std::uint32_t s = around & ~w;
        if (!seen[s]) {
          seen[s] = true;
          next.push_back(s);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen[0];
}

}  // namespace hunt::testing
