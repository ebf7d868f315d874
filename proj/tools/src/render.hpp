#pragma once

#include <iosfwd>

#include <json.hpp>

namespace hunt::cli {

using Json = nlohmann::ordered_json;

/// Human-readable rendering of a result object: one "key: value" line per
/// field, vertex lists space-separated, lists of lists as {a,b} groups, and
/// "edges" arrays as edge-list lines.
void render_text(const Json& j, std::ostream& out, int indent = 0);

}  // namespace hunt::cli
