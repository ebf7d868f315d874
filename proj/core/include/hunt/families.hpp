#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "hunt/graph.hpp"

namespace hunt {

Graph path_graph(std::size_t n);
/// n >= 3.
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// K°_n: complete graph with a loop on every vertex.
Graph complete_graph_with_loops(std::size_t n);
/// Vertex (i, j) is i * cols + j.
Graph grid_graph(std::size_t rows, std::size_t cols);
Graph hypercube_graph(std::size_t dimension);
/// Center 0; leg i occupies vertices 1 + i*length .. (i+1)*length, nearest
/// the center first.
Graph spider_graph(std::size_t legs, std::size_t length);

/// The four obstructions to one-hunter wins on graphs with loops.
///
/// Shared labeling: x = 0, first leg a1 b1 c1 = 1 2 3, second leg
/// a2 b2 c2 = 4 5 6. Then
///   H1: third leg a3 b3 c3 = 7 8 9 (the 3-spider);
///   H2: path x a3 b3 with a3 = 7, b3 = 8 and a loop on b3;
///   H3: edge x a3 with a3 = 7 and a loop on a3;
///   H4: a loop on x.
Graph forbidden_graph(int index);

/// Erdős–Rényi G(n, p) with an independent loop at each vertex with
/// probability q. Deterministic for a given seed.
Graph random_graph(std::size_t n, double p, double q, std::uint64_t seed);

/// Dispatch by family name: path n | cycle n | complete n |
/// complete_with_loops n | grid r c | hypercube d | spider legs len |
/// H1 | H2 | H3 | H4 | random n p q seed.
/// Throws std::invalid_argument on an unknown family or invalid params.
Graph generate_family(std::string_view family, std::span<const double> params);

}  // namespace hunt
