#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hunt/constructions.hpp"
#include "hunt/strategy.hpp"

namespace hunt {

// Strategy file:  {"n": 4, "k": 1, "shots": [[1], [2], [2], [1]]}
//
// Errors raise ParseError with the 1-based line of the problem.

Strategy read_strategy(std::string_view text);
Strategy read_strategy_file(const std::string& path);
std::string write_strategy(const Strategy& s);

// Layout sidecar:  {"n": 8, "blocks": {"G": [0, 3], "A": [3, 5], ...},
//                   "start": [0, 1, 2]}
// Blocks keep their order; ranges are half-open.

struct LayoutFile {
  std::size_t order = 0;
  Layout layout;
  std::optional<VertexSet> start;
};

std::string write_layout(std::size_t order, const Layout& layout,
                         const std::optional<VertexSet>& start = std::nullopt);
LayoutFile read_layout(std::string_view text);

}  // namespace hunt
