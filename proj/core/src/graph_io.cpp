#include "hunt/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hunt/errors.hpp"

namespace hunt {

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Parses exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view s, std::uint64_t& a, std::uint64_t& b) {
  auto read = [&](std::uint64_t& out) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr == s.data()) return false;
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return true;
  };
  if (!read(a) || !read(b)) return false;
  return trim(s).empty();
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!parse_pair(body, a, b)) {
      throw ParseError(line_no, have_header ? "expected 'u v'" : "expected header 'n m'");
    }
    if (!have_header) {
      if (a > (std::uint64_t{1} << 31)) throw ParseError(line_no, "vertex count too large");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (edges.size() == m) throw ParseError(line_no, "more edge lines than declared");
    if (a >= n || b >= n) {
      throw ParseError(line_no, "endpoint out of range for " + std::to_string(n) + " vertices");
    }
    auto u = static_cast<Vertex>(std::min(a, b));
    auto v = static_cast<Vertex>(std::max(a, b));
    if (!seen.insert({u, v}).second) {
      throw ParseError(line_no, "duplicate edge (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header 'n m'");
  if (edges.size() != m) {
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  }
  return build_graph(static_cast<std::size_t>(n), edges);
}

Graph read_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return read_graph(in);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file '" + path + "'");
  out << write_graph(g);
}

}  // namespace hunt
