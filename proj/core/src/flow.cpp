#include "hunt/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace hunt {

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, Capacity capacity) {
  if (from >= node_count() || to >= node_count()) {
    throw std::out_of_range("flow arc endpoint out of range");
  }
  if (capacity < 0) throw std::invalid_argument("negative arc capacity");
  const std::size_t id = arcs_.size();
  arcs_.push_back({to, capacity});
  arcs_.push_back({from, 0});
  adjacency_[from].push_back(id);
  adjacency_[to].push_back(id + 1);
  return id;
}

bool FlowNetwork::build_levels(std::size_t source, std::size_t sink) {
  level_.assign(node_count(), -1);
  std::queue<std::size_t> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop();
    for (std::size_t id : adjacency_[v]) {
      const Arc& a = arcs_[id];
      if (a.residual > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        queue.push(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

// Iterative DFS would avoid deep recursion, but path length is bounded by
// the level count, which stays small for the layered networks built here.
FlowNetwork::Capacity FlowNetwork::push(std::size_t v, std::size_t sink, Capacity limit) {
  if (v == sink) return limit;
  for (std::size_t& i = cursor_[v]; i < adjacency_[v].size(); ++i) {
    const std::size_t id = adjacency_[v][i];
    Arc& a = arcs_[id];
    if (a.residual <= 0 || level_[a.to] != level_[v] + 1) continue;
    if (Capacity got = push(a.to, sink, std::min(limit, a.residual)); got > 0) {
      a.residual -= got;
      arcs_[id ^ 1U].residual += got;
      return got;
    }
  }
  return 0;
}

FlowNetwork::Capacity FlowNetwork::max_flow(std::size_t source, std::size_t sink) {
  if (source >= node_count() || sink >= node_count() || source == sink) {
    throw std::invalid_argument("invalid source/sink pair");
  }
  Capacity total = 0;
  while (build_levels(source, sink)) {
    cursor_.assign(node_count(), 0);
    while (Capacity f = push(source, sink, std::numeric_limits<Capacity>::max())) total += f;
  }
  return total;
}

std::vector<bool> FlowNetwork::source_side(std::size_t source) const {
  std::vector<bool> seen(node_count(), false);
  std::vector<std::size_t> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t id : adjacency_[v]) {
      const Arc& a = arcs_[id];
      if (a.residual > 0 && !seen[a.to]) {
        seen[a.to] = true;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

}  // namespace hunt
