#include "hunt/strategy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hunt {

Strategy::Strategy(std::size_t universe, std::size_t budget, std::vector<VertexSet> shots)
    : universe_(universe), budget_(budget) {
  shots_.reserve(shots.size());
  for (auto& s : shots) append(std::move(s));
}

Strategy Strategy::from_lists(std::size_t universe, std::size_t budget,
                              const std::vector<std::vector<Vertex>>& shots) {
  Strategy s(universe, budget);
  for (const auto& list : shots) {
    VertexSet w(universe);
    for (Vertex v : list) {
      if (v >= universe) {
        throw std::invalid_argument("shot vertex " + std::to_string(v) +
                                    " out of range for " + std::to_string(universe) +
                                    " vertices");
      }
      if (w.contains(v)) {
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " repeated within one shot set");
      }
      w.insert(v);
    }
    s.append(std::move(w));
  }
  return s;
}

std::size_t Strategy::max_shot_size() const {
  std::size_t best = 0;
  for (const auto& w : shots_) best = std::max(best, w.size());
  return best;
}

void Strategy::append(VertexSet shot) {
  if (shot.universe() != universe_) {
    throw std::invalid_argument("shot set universe " + std::to_string(shot.universe()) +
                                " does not match strategy universe " +
                                std::to_string(universe_));
  }
  if (shot.size() > budget_) {
    throw std::invalid_argument("shot set " + std::to_string(shots_.size() + 1) + " has " +
                                std::to_string(shot.size()) + " vertices, budget is " +
                                std::to_string(budget_));
  }
  shots_.push_back(std::move(shot));
}

Strategy reverse_strategy(const Strategy& s) {
  std::vector<VertexSet> shots(s.shots().rbegin(), s.shots().rend());
  return Strategy(s.universe(), s.budget(), std::move(shots));
}

}  // namespace hunt
