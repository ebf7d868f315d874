#include "hunt/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hunt/errors.hpp"

namespace hunt {

using nlohmann::ordered_json;

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

ordered_json parse(std::string_view text) {
  try {
    return ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
}

std::size_t get_count(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw ParseError(1, std::string("missing or non-negative integer field '") + key + "'");
  }
  return j[key].get<std::size_t>();
}

std::vector<Vertex> get_vertices(const ordered_json& j, std::size_t universe, const char* what) {
  if (!j.is_array()) throw ParseError(1, std::string(what) + " must be a list of vertices");
  std::vector<Vertex> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() >= universe) {
      throw ParseError(1, std::string(what) + " has a vertex out of range 0.." +
                              std::to_string(universe == 0 ? 0 : universe - 1));
    }
    out.push_back(v.get<Vertex>());
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Strategy read_strategy(std::string_view text) {
  const ordered_json j = parse(text);
  if (!j.is_object()) throw ParseError(1, "strategy must be a JSON object");
  const std::size_t n = get_count(j, "n");
  const std::size_t k = get_count(j, "k");
  if (!j.contains("shots") || !j["shots"].is_array()) {
    throw ParseError(1, "missing 'shots' list");
  }
  std::vector<std::vector<Vertex>> shots;
  for (const auto& shot : j["shots"]) shots.push_back(get_vertices(shot, n, "shot"));
  try {
    return Strategy::from_lists(n, k, shots);
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }
}

Strategy read_strategy_file(const std::string& path) { return read_strategy(slurp(path)); }

std::string write_strategy(const Strategy& s) {
  ordered_json j;
  j["n"] = s.universe();
  j["k"] = s.budget();
  j["shots"] = ordered_json::array();
  for (const auto& shot : s.shots()) j["shots"].push_back(shot.to_vector());
  return j.dump() + "\n";
}

std::string write_layout(std::size_t order, const Layout& layout,
                         const std::optional<VertexSet>& start) {
  ordered_json j;
  j["n"] = order;
  j["blocks"] = ordered_json::object();
  for (const Block& b : layout.blocks()) j["blocks"][b.name] = {b.begin, b.end};
  if (start) j["start"] = start->to_vector();
  return j.dump(2) + "\n";
}

LayoutFile read_layout(std::string_view text) {
  const ordered_json j = parse(text);
  if (!j.is_object()) throw ParseError(1, "layout must be a JSON object");
  LayoutFile out;
  out.order = get_count(j, "n");
  if (!j.contains("blocks") || !j["blocks"].is_object()) {
    throw ParseError(1, "missing 'blocks' object");
  }
  for (const auto& [name, range] : j["blocks"].items()) {
    auto ends = get_vertices(range, out.order + 1, "block range");
    if (ends.size() != 2 || ends[0] > ends[1]) {
      throw ParseError(1, "block '" + name + "' needs a [begin, end) pair");
    }
    out.layout.add(name, ends[0], ends[1]);
  }
  if (j.contains("start")) {
    auto members = get_vertices(j["start"], out.order, "start");
    out.start = VertexSet(out.order, members);
  }
  return out;
}

}  // namespace hunt
