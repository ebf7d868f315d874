#include "doctest.h"

#include <stdexcept>

#include "hunt/families.hpp"
#include "hunt/graph.hpp"

using namespace hunt;

TEST_CASE("build_graph normalizes and validates") {
  Graph g = build_graph(4, {{1, 0}, {2, 2}, {3, 1}});
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.loop_count() == 1);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_loop(2));
  CHECK(g.degree(2) == 1);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 3}, {2, 2}});

  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(3, {{2, 2}, {2, 2}}), std::invalid_argument);
}

TEST_CASE("neighborhood includes looped vertices themselves") {
  Graph g = build_graph(3, {{0, 0}, {0, 1}});
  CHECK(neighborhood(g, VertexSet(3, {0})) == VertexSet(3, {0, 1}));
  CHECK(neighborhood(g, VertexSet(3, {1})) == VertexSet(3, {0}));
  CHECK(neighborhood(g, VertexSet(3, {2})).empty());
}

TEST_CASE("degeneracy of standard families") {
  CHECK(degeneracy(path_graph(5)) == 1);
  CHECK(degeneracy(cycle_graph(7)) == 2);
  CHECK(degeneracy(complete_graph(5)) == 4);
  CHECK(degeneracy(complete_graph_with_loops(4)) == 4);
  CHECK(degeneracy(grid_graph(4, 4)) == 2);
  CHECK(degeneracy(hypercube_graph(3)) == 3);
  CHECK(degeneracy(build_graph(1, {{0, 0}})) == 1);
  CHECK(degeneracy(Graph{}) == 0);
}

TEST_CASE("components and induced subgraphs") {
  Graph g = build_graph(6, {{0, 1}, {2, 3}, {3, 4}, {5, 5}});
  CHECK(connected_components(g) == std::vector<std::size_t>{0, 0, 1, 1, 1, 2});
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(path_graph(4)));

  Graph sub = induced_subgraph(g, VertexSet(6, {2, 3, 5}));
  CHECK(sub.order() == 3);
  CHECK(sub.edges() == std::vector<Edge>{{0, 1}, {2, 2}});
}

TEST_CASE("neighbor masks") {
  Graph g = build_graph(3, {{0, 1}, {2, 2}});
  CHECK(neighbor_masks(g) == std::vector<std::uint64_t>{0b010, 0b001, 0b100});
}
