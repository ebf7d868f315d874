#pragma once

#include <cstddef>
#include <vector>

#include "hunt/vertex_set.hpp"

namespace hunt {

/// Oblivious hunter strategy: shot sets W_1..W_T over a fixed universe, each
/// of size at most the declared budget. Shot sets smaller than the budget
/// (including empty ones) are allowed.
class Strategy {
 public:
  Strategy(std::size_t universe, std::size_t budget)
      : universe_(universe), budget_(budget) {}
  /// Throws std::invalid_argument if a shot set has the wrong universe or
  /// exceeds the budget.
  Strategy(std::size_t universe, std::size_t budget, std::vector<VertexSet> shots);

  static Strategy from_lists(std::size_t universe, std::size_t budget,
                             const std::vector<std::vector<Vertex>>& shots);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t budget() const noexcept { return budget_; }
  std::size_t length() const noexcept { return shots_.size(); }
  bool empty() const noexcept { return shots_.empty(); }
  const std::vector<VertexSet>& shots() const noexcept { return shots_; }
  /// 0-based: shot(0) is W_1.
  const VertexSet& shot(std::size_t t) const { return shots_.at(t); }
  std::size_t max_shot_size() const;

  void append(VertexSet shot);

  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  std::size_t universe_;
  std::size_t budget_;
  std::vector<VertexSet> shots_;
};

/// W_T, ..., W_1 with the same budget. For start = V, the reversal of a
/// winning strategy is winning.
Strategy reverse_strategy(const Strategy& s);

}  // namespace hunt
