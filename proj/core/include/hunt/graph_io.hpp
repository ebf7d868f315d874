#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hunt/graph.hpp"

namespace hunt {

// Edge-list text format:
//
//   # optional comment lines
//   n m
//   u v        (m lines, 0-based; "u u" is a loop)
//
// Blank lines are ignored. Errors raise ParseError with the 1-based line.

Graph read_graph(std::istream& in);
Graph read_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Deterministic: header, then edges sorted lexicographically with u <= v.
std::string write_graph(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace hunt
