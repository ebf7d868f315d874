#include "render.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace hunt::cli {

namespace {

bool all_scalars(const Json& a) {
  return std::all_of(a.begin(), a.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string scalar(const Json& x) {
  if (x.is_string()) return x.get<std::string>();
  if (x.is_null()) return "-";
  return x.dump();
}

std::string group(const Json& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += scalar(a[i]);
  }
  return s + "}";
}

}  // namespace

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render_text(value, out, indent + 2);
    } else if (value.is_array() && key == "edges") {
      out << pad << key << ": " << value.size() << "\n";
      for (const auto& e : value) out << pad << "  " << scalar(e[0]) << " " << scalar(e[1]) << "\n";
    } else if (value.is_array() && all_scalars(value)) {
      out << pad << key << ":";
      for (const auto& x : value) out << " " << scalar(x);
      out << "\n";
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), [](const Json& x) {
                 return x.is_array() && all_scalars(x);
               })) {
      out << pad << key << ":";
      for (const auto& x : value) out << " " << group(x);
      out << "\n";
    } else if (value.is_array()) {
      out << pad << key << ":\n";
      for (const auto& x : value) {
        if (x.is_object()) {
          out << pad << "  -\n";
          render_text(x, out, indent + 4);
        } else {
          out << pad << "  - " << scalar(x) << "\n";
        }
      }
    } else {
      out << pad << key << ": " << scalar(value) << "\n";
    }
  }
}

}  // namespace hunt::cli
