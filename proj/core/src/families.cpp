#include "hunt/families.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace hunt {

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return build_graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  }
  return build_graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return build_graph(n, edges);
}

Graph complete_graph_with_loops(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u; v < n; ++v) edges.push_back({u, v});
  }
  return build_graph(n, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  auto at = [cols](std::size_t i, std::size_t j) {
    return static_cast<Vertex>(i * cols + j);
  };
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.push_back({at(i, j), at(i, j + 1)});
      if (i + 1 < rows) edges.push_back({at(i, j), at(i + 1, j)});
    }
  }
  return build_graph(rows * cols, edges);
}

Graph hypercube_graph(std::size_t dimension) {
  if (dimension > 20) throw std::invalid_argument("hypercube dimension too large");
  const std::size_t n = std::size_t{1} << dimension;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t b = 0; b < dimension; ++b) {
      Vertex w = v ^ (Vertex{1} << b);
      if (v < w) edges.push_back({v, w});
    }
  }
  return build_graph(n, edges);
}

Graph spider_graph(std::size_t legs, std::size_t length) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < legs; ++i) {
    Vertex prev = 0;
    for (std::size_t j = 0; j < length; ++j) {
      auto v = static_cast<Vertex>(1 + i * length + j);
      edges.push_back({prev, v});
      prev = v;
    }
  }
  return build_graph(1 + legs * length, edges);
}

Graph forbidden_graph(int index) {
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}};
  switch (index) {
    case 1:
      edges.insert(edges.end(), {{0, 7}, {7, 8}, {8, 9}});
      return build_graph(10, edges);
    case 2:
      edges.insert(edges.end(), {{0, 7}, {7, 8}, {8, 8}});
      return build_graph(9, edges);
    case 3:
      edges.insert(edges.end(), {{0, 7}, {7, 7}});
      return build_graph(8, edges);
    case 4:
      edges.push_back({0, 0});
      return build_graph(7, edges);
    default:
      throw std::invalid_argument("forbidden graph index must be 1..4");
  }
}

Graph random_graph(std::size_t n, double p, double q, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("random graph probabilities must lie in [0,1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    if (unit(rng) < q) edges.push_back({u, u});
    for (Vertex v = u + 1; v < n; ++v) {
      if (unit(rng) < p) edges.push_back({u, v});
    }
  }
  return build_graph(n, edges);
}

namespace {

std::size_t count_param(std::span<const double> params, std::size_t i,
                        std::string_view family) {
  double x = params[i];
  if (!(x >= 0.0) || std::floor(x) != x || x > 1e7) {
    throw std::invalid_argument(std::string(family) + ": parameter " +
                                std::to_string(i + 1) +
                                " must be a non-negative integer");
  }
  return static_cast<std::size_t>(x);
}

void expect_arity(std::span<const double> params, std::size_t arity,
                  std::string_view family) {
  if (params.size() != arity) {
    throw std::invalid_argument(std::string(family) + " expects " +
                                std::to_string(arity) + " parameter(s), got " +
                                std::to_string(params.size()));
  }
}

}  // namespace

Graph generate_family(std::string_view family, std::span<const double> params) {
  if (family == "path") {
    expect_arity(params, 1, family);
    return path_graph(count_param(params, 0, family));
  }
  if (family == "cycle") {
    expect_arity(params, 1, family);
    return cycle_graph(count_param(params, 0, family));
  }
  if (family == "complete") {
    expect_arity(params, 1, family);
    return complete_graph(count_param(params, 0, family));
  }
  if (family == "complete_with_loops") {
    expect_arity(params, 1, family);
    return complete_graph_with_loops(count_param(params, 0, family));
  }
  if (family == "grid") {
    expect_arity(params, 2, family);
    return grid_graph(count_param(params, 0, family), count_param(params, 1, family));
  }
  if (family == "hypercube") {
    expect_arity(params, 1, family);
    return hypercube_graph(count_param(params, 0, family));
  }
  if (family == "spider") {
    expect_arity(params, 2, family);
    return spider_graph(count_param(params, 0, family), count_param(params, 1, family));
  }
  if (family.size() == 2 && family[0] == 'H' && family[1] >= '1' && family[1] <= '4') {
    expect_arity(params, 0, family);
    return forbidden_graph(family[1] - '0');
  }
  if (family == "random") {
    expect_arity(params, 4, family);
    return random_graph(count_param(params, 0, family), params[1], params[2],
                        count_param(params, 3, family));
  }
  throw std::invalid_argument("unknown graph family '" + std::string(family) + "'");
}

}  // namespace hunt
