#include "hunt/recognizer.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "hunt/constructions.hpp"
#include "hunt/families.hpp"

namespace hunt {

std::string_view obstruction_name(Obstruction o) {
  switch (o) {
    case Obstruction::cycle: return "cycle";
    case Obstruction::two_loops: return "two_loops";
    case Obstruction::h1: return "H1";
    case Obstruction::h2: return "H2";
    case Obstruction::h3: return "H3";
    case Obstruction::h4: return "H4";
  }
  return "unknown";
}

namespace {

constexpr Vertex kNone = ~Vertex{0};

class Forest {
 public:
  explicit Forest(std::size_t n) : adj_(n) {}

  void link(Vertex u, Vertex v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  void sort() {
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }
  const std::vector<Vertex>& adj(Vertex v) const { return adj_[v]; }

  /// Unique path from `from` to `to`, both included; empty if disconnected.
  std::vector<Vertex> path(Vertex from, Vertex to) const {
    std::vector<Vertex> parent(adj_.size(), kNone);
    std::queue<Vertex> queue;
    parent[from] = from;
    queue.push(from);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex w : adj_[v]) {
        if (parent[w] == kNone) {
          parent[w] = v;
          queue.push(w);
        }
      }
    }
    if (parent[to] == kNone) return {};
    std::vector<Vertex> out{to};
    while (out.back() != from) out.push_back(parent[out.back()]);
    std::reverse(out.begin(), out.end());
    return out;
  }

  /// A path y, b, c hanging off x through its neighbor y, lowest indices first.
  std::optional<std::vector<Vertex>> leg(Vertex x, Vertex y) const {
    for (Vertex b : adj_[y]) {
      if (b == x) continue;
      for (Vertex c : adj_[b]) {
        if (c != y) return std::vector<Vertex>{y, b, c};
      }
    }
    return std::nullopt;
  }

  /// Up to `want` legs of x, skipping the branch through `avoid`.
  std::vector<std::vector<Vertex>> legs(Vertex x, Vertex avoid, std::size_t want) const {
    std::vector<std::vector<Vertex>> out;
    for (Vertex y : adj_[x]) {
      if (y == avoid || out.size() == want) continue;
      if (auto l = leg(x, y)) out.push_back(std::move(*l));
    }
    return out;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }
  Vertex find(Vertex v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<Vertex> parent_;
};

Witness make_witness(Obstruction kind, Graph pattern, std::vector<Vertex> embedding) {
  return Witness{kind, std::move(pattern), std::move(embedding)};
}

std::vector<Vertex> flatten(Vertex x, const std::vector<std::vector<Vertex>>& legs) {
  std::vector<Vertex> out{x};
  for (const auto& l : legs) out.insert(out.end(), l.begin(), l.end());
  return out;
}

std::optional<Witness> find_obstruction(const Graph& g) {
  const std::size_t n = g.order();
  Forest forest(n);
  DisjointSets sets(n);
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    if (!sets.unite(e.u, e.v)) {
      forest.sort();
      std::vector<Vertex> cycle = forest.path(e.u, e.v);
      Graph pattern = cycle_graph(cycle.size());
      return make_witness(Obstruction::cycle, std::move(pattern), std::move(cycle));
    }
    forest.link(e.u, e.v);
  }
  forest.sort();

  // At most one loop per component from here on.
  std::vector<Vertex> loop_of(n, kNone);
  for (Vertex v = 0; v < n; ++v) {
    if (!g.has_loop(v)) continue;
    Vertex root = sets.find(v);
    if (loop_of[root] != kNone) {
      std::vector<Vertex> path = forest.path(loop_of[root], v);
      std::vector<Edge> edges{{0, 0}, {static_cast<Vertex>(path.size() - 1),
                                       static_cast<Vertex>(path.size() - 1)}};
      for (Vertex i = 0; i + 1 < path.size(); ++i) edges.push_back({i, i + 1});
      Graph pattern = build_graph(path.size(), edges);
      return make_witness(Obstruction::two_loops, std::move(pattern), std::move(path));
    }
    loop_of[root] = v;
  }

  for (Vertex x = 0; x < n; ++x) {
    auto legs = forest.legs(x, kNone, 3);
    if (legs.size() == 3) return make_witness(Obstruction::h1, forbidden_graph(1), flatten(x, legs));
  }

  // Step from each vertex toward its component's loop, if any.
  std::vector<Vertex> toward(n, kNone);
  std::vector<std::size_t> dist(n, 0);
  for (Vertex l = 0; l < n; ++l) {
    if (!g.has_loop(l)) continue;
    std::queue<Vertex> queue;
    toward[l] = l;
    queue.push(l);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex w : forest.adj(v)) {
        if (toward[w] == kNone) {
          toward[w] = v;
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
      }
    }
  }

  for (std::size_t d = 0; d <= 2; ++d) {
    for (Vertex x = 0; x < n; ++x) {
      if (toward[x] == kNone || dist[x] != d) continue;
      const Vertex avoid = d == 0 ? kNone : toward[x];
      auto legs = forest.legs(x, avoid, 2);
      if (legs.size() < 2) continue;
      std::vector<Vertex> embedding = flatten(x, legs);
      if (d == 0) return make_witness(Obstruction::h4, forbidden_graph(4), std::move(embedding));
      embedding.push_back(toward[x]);
      if (d == 1) return make_witness(Obstruction::h3, forbidden_graph(3), std::move(embedding));
      embedding.push_back(toward[toward[x]]);
      return make_witness(Obstruction::h2, forbidden_graph(2), std::move(embedding));
    }
  }
  return std::nullopt;
}

}  // namespace

RecognizerVerdict recognize(const Graph& g, RecognizerMethod method) {
  RecognizerVerdict verdict;
  verdict.method = method;
  verdict.witness = method == RecognizerMethod::direct ? find_obstruction(g)
                                                       : find_obstruction(tensor_k2(g));
  verdict.one_hunterwin = !verdict.witness.has_value();
  return verdict;
}

bool is_subgraph_embedding(const Graph& pattern, const Graph& host,
                           std::span<const Vertex> embedding) {
  if (embedding.size() != pattern.order()) return false;
  std::vector<Vertex> image(embedding.begin(), embedding.end());
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
  if (!image.empty() && image.back() >= host.order()) return false;
  const auto edges = pattern.edges();
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return host.has_edge(embedding[e.u], embedding[e.v]);
  });
}

}  // namespace hunt
