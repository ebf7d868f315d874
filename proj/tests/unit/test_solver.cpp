#include "doctest.h"

#include <cstdlib>
#include <stdexcept>

#include "graph_enum.hpp"
#include "hunt/constructions.hpp"
#include "hunt/engine.hpp"
#include "hunt/families.hpp"
#include "hunt/solver.hpp"

using namespace hunt;

namespace {

std::size_t h_of(const Graph& g, std::optional<std::size_t> limit = std::nullopt) {
  SolveResult r = hunting_number(g, SolveQuery{std::nullopt, std::nullopt, limit});
  REQUIRE(r.outcome == Outcome::win);
  return r.value;
}

}  // namespace

TEST_CASE("known hunting numbers") {
  CHECK(h_of(path_graph(2)) == 1);
  CHECK(h_of(path_graph(7)) == 1);
  CHECK(h_of(cycle_graph(5)) == 2);
  CHECK(h_of(complete_graph(5)) == 4);
  CHECK(h_of(complete_graph_with_loops(3)) == 3);
  CHECK(h_of(spider_graph(3, 2)) == 1);
  CHECK(h_of(spider_graph(3, 3)) == 2);
  CHECK(h_of(grid_graph(3, 3)) == 2);
  CHECK(h_of(build_graph(3, {})) == 0);
  CHECK(h_of(build_graph(1, {{0, 0}})) == 1);
}

TEST_CASE("two hunters lose on the 3-cube, exhaustively") {
  // Every territory reachable with at most two shots per round is explored;
  // none of them is empty.
  Graph q3 = hypercube_graph(3);
  CHECK_FALSE(testing::reference_k_wins(q3, 2));
  CHECK(testing::reference_k_wins(q3, 3));
  CHECK_FALSE(testing::reference_k_wins(cycle_graph(4), 1));
  CHECK(h_of(q3) == 3);
}

TEST_CASE("solver agrees with the unpruned reference search") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Graph g = testing::random_small_graph(1000 + seed, 1, 8, 0.25);
    std::size_t h = h_of(g);
    CHECK(testing::reference_k_wins(g, h));
    if (h > 0) CHECK_FALSE(testing::reference_k_wins(g, h - 1));
  }
}

TEST_CASE("returned strategies verify and are shortest") {
  Graph g = grid_graph(3, 3);
  SolveResult r = solve_k(g, SolveQuery{std::nullopt, 2, std::nullopt});
  REQUIRE(r.outcome == Outcome::win);
  REQUIRE(r.strategy.has_value());
  CHECK(r.strategy->max_shot_size() <= 2);
  Verification v = verify_strategy(g, g.vertices(), *r.strategy);
  REQUIRE(is_win(v));
  // No strategy one round shorter exists.
  SolveResult shorter = solve_k(g, SolveQuery{std::nullopt, 2, r.strategy->length() - 1});
  CHECK(shorter.outcome == Outcome::no_win);
}

TEST_CASE("restricted start and time limit") {
  Graph p5 = path_graph(5);
  SolveResult end = hunting_number(p5, SolveQuery{VertexSet(5, {0}), std::nullopt, std::nullopt});
  CHECK(end.value == 1);
  CHECK(hunting_number(p5, SolveQuery{VertexSet(5), std::nullopt, std::nullopt}).value == 0);
  CHECK(h_of(p5, 1) == 5);
  CHECK(h_of(p5, 2) == 2);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Graph g = testing::random_small_graph(seed, 2, 8, 0.2);
    std::size_t prev = g.order();
    CHECK(h_of(g, 1) == g.order());
    for (std::size_t l = 2; l <= 6; ++l) {
      std::size_t cur = h_of(g, l);
      CHECK(cur <= prev);
      CHECK(cur >= h_of(g));
      prev = cur;
    }
  }
}

TEST_CASE("thread count does not change the answer") {
  Graph g = grid_graph(3, 4);
  SearchLimits one;
  SearchLimits many;
  many.threads = 4;
  SolveResult a = hunting_number(g, SolveQuery{}, one);
  SolveResult b = hunting_number(g, SolveQuery{}, many);
  CHECK(a.value == b.value);
  CHECK(a.strategy == b.strategy);
  CHECK(a.states_explored == b.states_explored);
}

TEST_CASE("state cap yields unknown with a bracket") {
  SearchLimits tight;
  tight.max_states = 5;
  SolveResult r = hunting_number(grid_graph(4, 4), SolveQuery{}, tight);
  CHECK(r.outcome == Outcome::unknown);
  CHECK(r.lower <= 3);
  CHECK(r.upper >= 3);
  CHECK_FALSE(r.strategy.has_value());
}

TEST_CASE("argument validation") {
  Graph g = path_graph(3);
  CHECK_THROWS_AS(solve_k(g, SolveQuery{}), std::invalid_argument);
  CHECK_THROWS_AS(solve_k(g, SolveQuery{std::nullopt, 4, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(solve_k(g, SolveQuery{std::nullopt, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(hunting_number(path_graph(65)), std::invalid_argument);
}
