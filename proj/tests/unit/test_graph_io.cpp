#include "doctest.h"

#include <string>

#include "hunt/errors.hpp"
#include "hunt/families.hpp"
#include "hunt/graph_io.hpp"

using namespace hunt;

TEST_CASE("round trip is exact") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_graph(9, 0.4, 0.3, seed);
    std::string text = write_graph(g);
    CHECK(read_graph(text) == g);
    CHECK(write_graph(read_graph(text)) == text);
  }
}

TEST_CASE("comments and blank lines are skipped") {
  Graph g = read_graph("# a path\n\n3 2\n0 1\n\n1 2\n");
  CHECK(g == path_graph(3));
  CHECK(write_graph(build_graph(2, {{1, 1}, {0, 1}})) == "2 2\n0 1\n1 1\n");
}

TEST_CASE("errors carry the offending line") {
  auto line_of = [](const std::string& text) {
    try {
      read_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("3 x\n") == 1);
  CHECK(line_of("3 2\n0 1\n") == 3);
  CHECK(line_of("3 1\n0 5\n") == 2);
  CHECK(line_of("3 2\n0 1\n1 0\n") == 3);
  CHECK(line_of("3 1\n0 1 2\n") == 2);
  CHECK(line_of("3 1\n0 1\n1 2\n") == 3);
  CHECK(line_of("") == 1);
}
