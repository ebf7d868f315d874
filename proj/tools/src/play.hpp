#pragma once

#include <cstddef>
#include <iosfwd>

#include "hunt/graph.hpp"

namespace hunt::cli {

/// One hunter-side game against the invisible rabbit, advanced one shot set
/// at a time with the engine's step rule.
class PlaySession {
 public:
  PlaySession(const Graph& g, VertexSet start, std::size_t budget);

  std::size_t round() const noexcept { return round_; }
  std::size_t budget() const noexcept { return budget_; }
  /// R_t after the last shot (the start set before the first one).
  const VertexSet& territory() const noexcept { return territory_; }
  bool cleared() const noexcept { return round_ > 0 && territory_.empty(); }

  /// Throws std::invalid_argument if the shot exceeds the budget or the
  /// game is already over.
  const VertexSet& shoot(const VertexSet& shot);

 private:
  const Graph& g_;
  VertexSet territory_;
  std::size_t budget_;
  std::size_t round_ = 0;
};

struct PlayOptions {
  bool blind = false;
};

/// Reads one shot per line ("1 2", "1,2", "-" for no shot, "q" to quit)
/// until the territory is empty or input ends. Returns the rounds played.
std::size_t play_loop(PlaySession& session, std::istream& in, std::ostream& out,
                      const PlayOptions& options);

}  // namespace hunt::cli
