#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hunt/graph.hpp"

namespace hunt {

/// Subgraph obstructions to a one-hunter win on graphs with loops.
enum class Obstruction {
  cycle,
  /// Two loops in one component, with the path joining them.
  two_loops,
  /// The 3-spider.
  h1,
  h2,
  h3,
  h4,
};

std::string_view obstruction_name(Obstruction o);

/// A copy of `pattern` inside the host graph: pattern vertex i maps to
/// embedding[i]. Patterns for h1..h4 use the labeling of forbidden_graph.
struct Witness {
  Obstruction kind;
  Graph pattern;
  std::vector<Vertex> embedding;
};

enum class RecognizerMethod {
  /// Forbidden-subgraph search on G itself.
  direct,
  /// Forest-without-3-spider test on the double cover B_G. Witnesses then
  /// embed into tensor_k2(G), not G.
  via_bg,
};

struct RecognizerVerdict {
  /// True iff one hunter suffices (edgeless loopless graphs need none).
  bool one_hunterwin = false;
  RecognizerMethod method = RecognizerMethod::direct;
  std::optional<Witness> witness;
};

RecognizerVerdict recognize(const Graph& g, RecognizerMethod method = RecognizerMethod::direct);

/// Injective map under which every pattern edge (loops included) is a host
/// edge.
bool is_subgraph_embedding(const Graph& pattern, const Graph& host,
                           std::span<const Vertex> embedding);

}  // namespace hunt
