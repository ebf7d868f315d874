#include "doctest.h"

#include <variant>

#include "graph_enum.hpp"
#include "hunt/engine.hpp"
#include "hunt/families.hpp"

using namespace hunt;

TEST_CASE("path sweep wins from both ends") {
  Graph p4 = path_graph(4);
  Strategy sweep = Strategy::from_lists(4, 1, {{1}, {2}, {2}, {1}});
  Verification v = verify_strategy(p4, p4.vertices(), sweep);
  REQUIRE(is_win(v));
  const Win& win = std::get<Win>(v);
  CHECK(win.rounds() == 4);
  CHECK(win.trace.territories.back().empty());
  CHECK(win.trace.territories[0] == VertexSet(4, {0, 2, 3}));
}

TEST_CASE("territory recurrence by hand") {
  Graph g = build_graph(3, {{0, 0}, {0, 1}, {1, 2}});
  VertexSet r = step(g, VertexSet(3, {0}), VertexSet(3));
  CHECK(r == VertexSet(3, {0, 1}));
  CHECK(step(g, r, VertexSet(3, {0})) == VertexSet(3, {1, 2}));
}

TEST_CASE("losing strategies come with a valid escape walk") {
  Graph c4 = cycle_graph(4);
  Strategy s = Strategy::from_lists(4, 1, {{0}, {1}, {2}, {3}});
  Verification v = verify_strategy(c4, c4.vertices(), s);
  REQUIRE_FALSE(is_win(v));
  const Lose& lose = std::get<Lose>(v);
  CHECK(lose.escape.walk.size() == 4);
  CHECK(is_escape_walk(c4, c4.vertices(), s, lose.escape));

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = testing::random_small_graph(seed, 3, 8, 0.2);
    Strategy guess(g.order(), 2);
    for (std::size_t t = 0; t < 5; ++t) {
      guess.append(VertexSet(g.order(), {static_cast<Vertex>((seed + t) % g.order())}));
    }
    Verification r = verify_strategy(g, g.vertices(), guess);
    if (auto* l = std::get_if<Lose>(&r)) {
      CHECK(is_escape_walk(g, g.vertices(), guess, l->escape));
      CHECK(l->escape.walk.size() == guess.length());
    }
  }
}

TEST_CASE("escape walk checker rejects bad walks") {
  Graph p3 = path_graph(3);
  Strategy s = Strategy::from_lists(3, 1, {{1}, {1}});
  CHECK(is_escape_walk(p3, p3.vertices(), s, EscapeWalk{{0, 1}}) == false);
  CHECK(is_escape_walk(p3, p3.vertices(), s, EscapeWalk{{0, 0}}) == false);
  CHECK(is_escape_walk(p3, VertexSet(3, {2}), s, EscapeWalk{{0}}) == false);
  CHECK(is_escape_walk(p3, p3.vertices(), s, EscapeWalk{{2}}));
}

TEST_CASE("empty start wins at once; empty strategy is rejected") {
  Graph g = path_graph(3);
  Verification v = verify_strategy(g, VertexSet(3), Strategy(3, 1));
  REQUIRE(is_win(v));
  CHECK(std::get<Win>(v).rounds() == 0);
  CHECK_THROWS(verify_strategy(g, g.vertices(), Strategy(3, 1)));
}

TEST_CASE("strategy budget and reversal") {
  CHECK_THROWS(Strategy::from_lists(3, 1, {{0, 1}}));
  Strategy s = Strategy::from_lists(5, 2, {{0}, {1, 2}, {}});
  CHECK(s.max_shot_size() == 2);
  Strategy r = reverse_strategy(s);
  CHECK(r.shot(0).empty());
  CHECK(r.shot(2) == VertexSet(5, {0}));
  CHECK(reverse_strategy(r) == s);
}
