#include "hunt/gadgets.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "hunt/families.hpp"

namespace hunt {

namespace {

void connect_blocks(std::vector<Edge>& out, const Block& a, const Block& b) {
  for (Vertex u = a.begin; u < a.end; ++u) {
    for (Vertex v = b.begin; v < b.end; ++v) out.push_back({u, v});
  }
}

void make_clique(std::vector<Edge>& out, const Block& b, bool loops) {
  for (Vertex u = b.begin; u < b.end; ++u) {
    for (Vertex v = loops ? u : u + 1; v < b.end; ++v) out.push_back({u, v});
  }
}

std::string v_name(std::size_t i) { return "V" + std::to_string(i); }
std::string x_name(std::size_t i) { return "X" + std::to_string(i); }
std::string xp_name(std::size_t i) { return "X'" + std::to_string(i); }

}  // namespace

ThreePartitionGadget gadget_3partition(const std::vector<std::size_t>& numbers) {
  const std::size_t n = numbers.size();
  if (n == 0 || n % 3 != 0) {
    throw std::invalid_argument("3-partition needs a positive multiple of 3 numbers, got " +
                                std::to_string(n));
  }
  const std::size_t m = n / 3;
  const std::size_t sum = std::accumulate(numbers.begin(), numbers.end(), std::size_t{0});
  if (sum % m != 0) {
    throw std::invalid_argument("sum " + std::to_string(sum) + " is not divisible by m = " +
                                std::to_string(m));
  }
  const std::size_t beta = sum / m;
  for (std::size_t i = 0; i < n; ++i) {
    // beta/4 < a_i < beta/2, kept in integers.
    if (!(4 * numbers[i] > beta && 2 * numbers[i] < beta)) {
      throw std::invalid_argument("a[" + std::to_string(i) + "] = " + std::to_string(numbers[i]) +
                                  " violates beta/4 < a_i < beta/2 with beta = " +
                                  std::to_string(beta));
    }
  }

  ThreePartitionGadget gadget;
  gadget.numbers = numbers;
  gadget.m = m;
  gadget.beta = beta;
  Layout& layout = gadget.layout;
  Vertex at = 0;
  auto place = [&](std::string name, std::size_t size) {
    layout.add(std::move(name), at, at + static_cast<Vertex>(size));
    at += static_cast<Vertex>(size);
  };
  place("Y", beta);
  place("Z1", beta);
  place("Z2", beta);
  place("Z3", beta);
  for (std::size_t i = 1; i <= 2 * m + 3; ++i) place(v_name(i), beta);
  place("U", beta + 2);
  for (std::size_t i = 1; i <= n; ++i) place(x_name(i), numbers[i - 1]);
  for (std::size_t i = 1; i <= n; ++i) place(xp_name(i), numbers[i - 1]);

  std::vector<Edge> edges;
  auto b = [&](const std::string& name) -> const Block& { return layout.block(name); };
  for (std::size_t i = 1; i <= 2 * m + 2; ++i) connect_blocks(edges, b(v_name(i)), b(v_name(i + 1)));
  for (std::size_t i = 1; i <= n; ++i) {
    connect_blocks(edges, b(x_name(i)), b(xp_name(i)));
    connect_blocks(edges, b(xp_name(i)), b("Y"));
  }
  connect_blocks(edges, b("Z2"), b("Z3"));
  make_clique(edges, b("U"), false);
  for (const char* name : {"Y", "Z1", "Z3"}) connect_blocks(edges, b("U"), b(name));
  connect_blocks(edges, b("U"), b(v_name(2 * m + 3)));
  gadget.graph = build_graph(at, edges);

  gadget.start = layout.members(at, {"Z1", "Z2", "V1"});
  for (std::size_t i = 1; i <= n; ++i) gadget.start |= layout.members(at, x_name(i));
  return gadget;
}

Strategy proof_strategy_3partition(const ThreePartitionGadget& gadget,
                                   const std::vector<std::vector<std::size_t>>& groups) {
  const std::size_t n = gadget.numbers.size();
  if (groups.size() != gadget.m) {
    throw std::invalid_argument("expected " + std::to_string(gadget.m) + " groups, got " +
                                std::to_string(groups.size()));
  }
  std::vector<bool> used(n, false);
  for (const auto& group : groups) {
    std::size_t sum = 0;
    for (std::size_t i : group) {
      if (i >= n || used[i]) {
        throw std::invalid_argument("group index " + std::to_string(i) +
                                    " is out of range or repeated");
      }
      used[i] = true;
      sum += gadget.numbers[i];
    }
    if (sum != gadget.beta) {
      throw std::invalid_argument("group sums to " + std::to_string(sum) + ", expected " +
                                  std::to_string(gadget.beta));
    }
  }

  const std::size_t order = gadget.graph.order();
  const Layout& layout = gadget.layout;
  Strategy s(order, gadget.beta);
  s.append(layout.members(order, "Z1"));
  s.append(layout.members(order, "Z3"));
  for (const auto& group : groups) {
    s.append(layout.members(order, "Y"));
    VertexSet shot(order);
    for (std::size_t i : group) shot |= layout.members(order, xp_name(i + 1));
    s.append(std::move(shot));
  }
  for (std::size_t i = 2 * gadget.m + 3; i >= 2; --i) s.append(layout.members(order, v_name(i)));
  return s;
}

LoopGadget gadget_hs(const Graph& g, const VertexSet& s, std::size_t k) {
  if (s.universe() != g.order()) {
    throw std::invalid_argument("start set universe does not match graph order");
  }
  if (k < 1 || k > s.size()) {
    throw std::invalid_argument("k = " + std::to_string(k) + " must satisfy 1 <= k <= |S| = " +
                                std::to_string(s.size()));
  }
  const std::size_t n = g.order();
  LoopGadget gadget;
  gadget.base_order = n;
  gadget.k = k;
  gadget.base_start = s;
  Layout& layout = gadget.layout;
  Vertex at = 0;
  auto place = [&](std::string name, std::size_t size) {
    layout.add(std::move(name), at, at + static_cast<Vertex>(size));
    at += static_cast<Vertex>(size);
  };
  place("G", n);
  place("A", n - k);
  place("B", k);
  place("C", 2 * k);

  std::vector<Edge> edges = g.edges();
  const Block& a = layout.block("A");
  const Block& b = layout.block("B");
  const Block& c = layout.block("C");
  make_clique(edges, a, true);
  make_clique(edges, b, true);
  make_clique(edges, c, true);
  connect_blocks(edges, a, b);
  connect_blocks(edges, a, c);
  s.for_each([&](Vertex v) {
    for (Vertex u = a.begin; u < a.end; ++u) edges.push_back({v, u});
  });
  connect_blocks(edges, layout.block("G"), b);
  gadget.graph = build_graph(at, edges);
  return gadget;
}

Strategy proof_strategy_hs(const LoopGadget& gadget, const Strategy& inner) {
  const std::size_t n = gadget.base_order;
  if (inner.universe() != n) {
    throw std::invalid_argument("inner strategy universe does not match the base graph");
  }
  if (inner.max_shot_size() > gadget.k) {
    throw std::invalid_argument("inner strategy uses more than k hunters");
  }
  if (inner.empty()) throw std::invalid_argument("inner strategy is empty");
  const std::size_t order = gadget.graph.order();
  const Layout& layout = gadget.layout;
  const VertexSet ab = layout.members(order, {"A", "B"});

  Strategy s(order, n + gadget.k);
  s.append(layout.members(order, {"B", "G"}));
  for (const VertexSet& shot : inner.shots()) {
    VertexSet lifted = ab;
    shot.for_each([&](Vertex v) { lifted.insert(v); });
    s.append(std::move(lifted));
  }
  s.append(layout.members(order, {"A", "C"}));
  return s;
}

Graph gadget_2to3(const Graph& g, std::size_t k, Layout* layout) {
  if (k < 4) throw std::invalid_argument("gadget_2to3 requires k >= 4, got " + std::to_string(k));
  if (layout) {
    *layout = Layout{};
    layout->add("G", 0, static_cast<Vertex>(g.order()));
    layout->add("K", static_cast<Vertex>(g.order()), static_cast<Vertex>(g.order() + k));
  }
  return disjoint_union(g, complete_graph(k));
}

Graph gadget_lplus2(const Graph& g, std::size_t k, Layout* layout) {
  if (k <= 2) throw std::invalid_argument("gadget_lplus2 requires k > 2, got " + std::to_string(k));
  if (layout) {
    const auto n = static_cast<Vertex>(g.order());
    *layout = Layout{};
    layout->add("G", 0, n);
    layout->add("K", n, n + static_cast<Vertex>(k));
    layout->add("I", n + static_cast<Vertex>(k), n + static_cast<Vertex>(2 * k + 1));
  }
  return disjoint_union(g, join(complete_graph(k), build_graph(k + 1, {})));
}

}  // namespace hunt
