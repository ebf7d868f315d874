#pragma once

#include <cstddef>
#include <vector>

#include "hunt/constructions.hpp"
#include "hunt/graph.hpp"
#include "hunt/strategy.hpp"

namespace hunt {

/// Restricted-start gadget built from a 3-partition instance a_1..a_n.
///
/// Blocks in index order: Y, Z1, Z2, Z3, V1..V{2m+3}, U, X1..Xn, X'1..X'n.
/// Every block is independent except U, a loopless clique on beta+2
/// vertices. Full connections: V_i–V_{i+1}, X_i–X'_i, Z2–Z3, X'_i–Y and
/// U–(Y, Z1, Z3, V{2m+3}). Start set S = Z1 ∪ Z2 ∪ V1 ∪ X1 ∪ ... ∪ Xn.
struct ThreePartitionGadget {
  Graph graph;
  VertexSet start;
  std::vector<std::size_t> numbers;
  std::size_t m = 0;
  std::size_t beta = 0;
  Layout layout;
};

/// Throws std::invalid_argument when n is not a positive multiple of 3, the
/// sum is not divisible by m, or some a_i violates beta/4 < a_i < beta/2.
ThreePartitionGadget gadget_3partition(const std::vector<std::size_t>& numbers);

/// The beta-hunter strategy Z1, Z3, (Y, S_j) for j = 1..m, then
/// V{2m+3}, ..., V2, where S_j is the union of X'_i over the indices i in
/// group j. Groups hold 0-based indices into the numbers and must form a
/// partition into m groups each summing to beta.
Strategy proof_strategy_3partition(const ThreePartitionGadget& gadget,
                                   const std::vector<std::vector<std::size_t>>& groups);

/// Loop gadget H for a graph G with start set S and 1 <= k <= |S|.
///
/// G keeps indices 0..n-1; then A = K°_{n-k}, B = K°_k, C = K°_{2k}.
/// A is joined to B, C and S; B is joined to all of V(G).
struct LoopGadget {
  Graph graph;
  std::size_t base_order = 0;
  std::size_t k = 0;
  VertexSet base_start;
  Layout layout;
};

LoopGadget gadget_hs(const Graph& g, const VertexSet& s, std::size_t k);

/// Wraps a winning h_S strategy of budget <= k on G into an (n+k)-hunter
/// strategy on H: B ∪ V, then W'_t ∪ A ∪ B for each inner shot, then A ∪ C.
Strategy proof_strategy_hs(const LoopGadget& gadget, const Strategy& inner);

/// G ⊔ K_k with k >= 4. Layout blocks "G" and "K".
Graph gadget_2to3(const Graph& g, std::size_t k, Layout* layout = nullptr);

/// G ⊔ (K_k ∇ I_{k+1}) with k > 2. Layout blocks "G", "K" and "I".
Graph gadget_lplus2(const Graph& g, std::size_t k, Layout* layout = nullptr);

}  // namespace hunt
