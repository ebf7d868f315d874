#include "hunt/enum_oracle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "hunt/engine.hpp"
#include "hunt/errors.hpp"

namespace hunt {

namespace {

// All subsets of {0..n-1} with at most `budget` members, by increasing size.
std::vector<VertexSet> small_subsets(std::size_t n, std::size_t budget) {
  std::vector<VertexSet> out{VertexSet(n)};
  std::vector<VertexSet> layer{VertexSet(n)};
  for (std::size_t size = 1; size <= budget && size <= n; ++size) {
    std::vector<VertexSet> grown;
    for (const auto& s : layer) {
      // Extend only past the largest member to avoid repeats.
      Vertex from = 0;
      s.for_each([&](Vertex v) { from = v + 1; });
      for (Vertex v = from; v < n; ++v) {
        VertexSet t = s;
        t.insert(v);
        grown.push_back(std::move(t));
      }
    }
    out.insert(out.end(), grown.begin(), grown.end());
    layer = std::move(grown);
  }
  return out;
}

}  // namespace

OracleVerdict strategy_enum_oracle(const Graph& g, std::size_t budget, std::size_t limit,
                                   const VertexSet& start, std::size_t cap) {
  if (limit == 0) throw std::invalid_argument("time limit must be at least 1");
  if (start.universe() != g.order()) {
    throw std::invalid_argument("start set universe does not match graph order");
  }
  const auto choices = small_subsets(g.order(), budget);
  std::size_t total = 1;
  for (std::size_t t = 0; t < limit; ++t) {
    if (total > cap / choices.size()) {
      throw CapExceeded("strategy enumeration would exceed " + std::to_string(cap) +
                        " sequences");
    }
    total *= choices.size();
  }

  OracleVerdict verdict;
  std::vector<std::size_t> odometer(limit, 0);
  while (true) {
    std::vector<VertexSet> shots;
    shots.reserve(limit);
    for (std::size_t i : odometer) shots.push_back(choices[i]);
    Strategy candidate(g.order(), budget, std::move(shots));
    ++verdict.sequences_checked;
    if (is_win(verify_strategy(g, start, candidate))) {
      verdict.win = true;
      verdict.strategy = std::move(candidate);
      return verdict;
    }
    std::size_t pos = limit;
    while (pos > 0 && ++odometer[pos - 1] == choices.size()) {
      odometer[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) return verdict;
  }
}

}  // namespace hunt
