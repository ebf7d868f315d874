#include "doctest.h"

#include "graph_enum.hpp"
#include "hunt/families.hpp"

using namespace hunt;
using namespace hunt::testing;

// Known class counts: graphs with loops allowed (1, 2, ...) and simple
// graphs, by number of vertices.
TEST_CASE("isomorphism class counts with loops") {
  const std::size_t expected[] = {2, 6, 20, 90, 544, 5096};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(graph_classes(n, true).size() == expected[n - 1]);
}

TEST_CASE("isomorphism class counts without loops") {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(graph_classes(n, false).size() == expected[n - 1]);
}

TEST_CASE("bipartite class counts") {
  const std::size_t expected[] = {1, 2, 3, 7, 13, 35, 88, 303};
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(graph_classes(n, false, small_bipartite).size() == expected[n - 1]);
  }
}

TEST_CASE("canonical code is invariant under relabeling") {
  // Path 0-1-2-3 with a loop on 2.
  SmallGraph a{4, {0b0010, 0b0101, 0b1110, 0b0100}};
  const std::vector<std::size_t> perm{2, 0, 3, 1};
  SmallGraph b{4, std::vector<std::uint32_t>(4, 0)};
  for (std::size_t u = 0; u < 4; ++u) {
    for (std::size_t v = 0; v < 4; ++v) {
      if ((a.rows[u] >> v) & 1U) b.rows[perm[u]] |= 1U << perm[v];
    }
  }
  CHECK(canonical_code(a) == canonical_code(b));
  // Same shape with the loop on an end vertex instead.
  SmallGraph c{4, {0b0011, 0b0101, 0b1010, 0b0100}};
  CHECK(canonical_code(a) != canonical_code(c));
}

TEST_CASE("random helper and reference search") {
  CHECK(random_small_graph(3, 4, 6, 0.0) == random_small_graph(3, 4, 6, 0.0));
  Graph g = random_small_graph(3, 4, 6, 0.0);
  CHECK(g.order() >= 4);
  CHECK(g.order() <= 6);
  CHECK(reference_k_wins(path_graph(5), 1));
  CHECK_FALSE(reference_k_wins(cycle_graph(5), 1));
  CHECK(reference_k_wins(cycle_graph(5), 2));
}
