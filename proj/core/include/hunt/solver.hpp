#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

#include "hunt/graph.hpp"
#include "hunt/strategy.hpp"

namespace hunt {

/// What to solve on a graph: rabbit start set (V when absent), hunter budget
/// for a fixed-k decision, and an optional capture deadline l.
struct SolveQuery {
  std::optional<VertexSet> start;
  std::optional<std::size_t> budget;
  std::optional<std::size_t> limit;
};

struct SearchLimits {
  static constexpr std::size_t kDefaultMaxStates = 10'000'000;

  std::size_t max_states = kDefaultMaxStates;
  /// Zero disables the wall-clock guard.
  std::chrono::milliseconds max_time{0};
  /// Worker threads for frontier expansion; results do not depend on it.
  unsigned threads = 1;

  /// Defaults, with max_states overridden by HUNT_STATE_CAP when set.
  static SearchLimits from_environment();
};

enum class Outcome {
  win,
  /// Exhausted search: no strategy within the budget (and limit) exists.
  no_win,
  /// A resource guard fired before the search finished.
  unknown,
};

struct SolveResult {
  Outcome outcome = Outcome::unknown;
  /// For hunting_number: the hunting number when outcome == win.
  /// For solve_k: the budget that was decided.
  std::size_t value = 0;
  /// For hunting_number: proven bracket [lower, upper] on the answer.
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::optional<Strategy> strategy;
  std::size_t states_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Largest graph order the territory search accepts.
inline constexpr std::size_t kMaxSolverOrder = 64;

/// Decides whether `budget` hunters can empty the territory (within `limit`
/// rounds when set). Breadth-first search over territories; a territory that
/// contains an already-visited one is pruned. A win returns a shortest
/// winning strategy, deterministically chosen.
///
/// Throws std::invalid_argument if the budget is missing or exceeds the
/// order, the limit is zero, or the order exceeds kMaxSolverOrder.
SolveResult solve_k(const Graph& g, const SolveQuery& q,
                    const SearchLimits& limits = SearchLimits{});

/// Least budget with a win, searching upward from a lower bound (the
/// degeneracy when start = V, else 0). The budget |start| always wins by
/// shooting the whole start set once. On resource exhaustion returns
/// Outcome::unknown with the proven bracket.
SolveResult hunting_number(const Graph& g, const SolveQuery& q = SolveQuery{},
                           const SearchLimits& limits = SearchLimits{});

}  // namespace hunt
