#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "hunt/families.hpp"

using namespace hunt;

TEST_CASE("family sizes") {
  CHECK(path_graph(5).edge_count() == 4);
  CHECK(cycle_graph(6).edge_count() == 6);
  CHECK(complete_graph(6).edge_count() == 15);
  CHECK(complete_graph_with_loops(4).edge_count() == 10);
  CHECK(complete_graph_with_loops(4).loop_count() == 4);
  Graph grid = grid_graph(3, 4);
  CHECK(grid.order() == 12);
  CHECK(grid.edge_count() == 17);
  CHECK(grid.has_edge(0, 4));
  Graph cube = hypercube_graph(4);
  CHECK(cube.order() == 16);
  CHECK(cube.edge_count() == 32);
  Graph spider = spider_graph(3, 3);
  CHECK(spider.order() == 10);
  CHECK(spider.degree(0) == 3);
  CHECK(spider.has_edge(1, 2));
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("obstruction graphs follow the shared labeling") {
  Graph h1 = forbidden_graph(1);
  CHECK(h1 == spider_graph(3, 3));
  Graph h2 = forbidden_graph(2);
  CHECK(h2.order() == 9);
  CHECK(h2.has_loop(8));
  CHECK(h2.has_edge(0, 7));
  Graph h3 = forbidden_graph(3);
  CHECK(h3.order() == 8);
  CHECK(h3.has_loop(7));
  Graph h4 = forbidden_graph(4);
  CHECK(h4.order() == 7);
  CHECK(h4.has_loop(0));
  CHECK(h4.loop_count() == 1);
  CHECK_THROWS_AS(forbidden_graph(5), std::invalid_argument);
}

TEST_CASE("random graphs are deterministic per seed") {
  CHECK(random_graph(12, 0.4, 0.2, 7) == random_graph(12, 0.4, 0.2, 7));
  CHECK(random_graph(12, 0.0, 0.0, 1).edge_count() == 0);
  CHECK(random_graph(6, 1.0, 1.0, 1) == complete_graph_with_loops(6));
  CHECK_THROWS_AS(random_graph(4, 1.5, 0.0, 1), std::invalid_argument);
}

TEST_CASE("generate_family dispatch") {
  std::vector<double> two{3, 4};
  CHECK(generate_family("grid", two) == grid_graph(3, 4));
  std::vector<double> none;
  CHECK(generate_family("H3", none) == forbidden_graph(3));
  std::vector<double> bad{2.5};
  CHECK_THROWS_AS(generate_family("path", bad), std::invalid_argument);
  CHECK_THROWS_AS(generate_family("petersen", none), std::invalid_argument);
}
