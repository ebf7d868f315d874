#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hunt {

/// Dinic's blocking-flow max-flow on a directed network with integer
/// capacities.
class FlowNetwork {
 public:
  using Capacity = std::int64_t;

  explicit FlowNetwork(std::size_t nodes) : adjacency_(nodes) {}

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  /// Returns the arc id; the paired reverse arc is id ^ 1.
  std::size_t add_arc(std::size_t from, std::size_t to, Capacity capacity);

  Capacity max_flow(std::size_t source, std::size_t sink);

  /// After max_flow: nodes reachable from the source in the residual network.
  std::vector<bool> source_side(std::size_t source) const;

  Capacity flow_on(std::size_t arc) const { return arcs_.at(arc ^ 1U).residual; }

 private:
  struct Arc {
    std::size_t to;
    Capacity residual;
  };

  bool build_levels(std::size_t source, std::size_t sink);
  Capacity push(std::size_t v, std::size_t sink, Capacity limit);

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace hunt
