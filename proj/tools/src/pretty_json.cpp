#include "abelcat/cli/pretty_json.hpp"

namespace abelcat::cli {

namespace {

bool holds_object(const nlohmann::ordered_json& j) {
  if (j.is_object()) return true;
  if (j.is_array())
    for (const auto& item : j)
      if (holds_object(item)) return true;
  return false;
}

void write(const nlohmann::ordered_json& j, std::string& out, std::size_t indent) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + nlohmann::ordered_json(it.key()).dump() + ": ";
      write(it.value(), out, indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else if (j.is_array() && holds_object(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write(j[i], out, indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      write(j[i], out, indent);
    }
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string pretty_json(const nlohmann::ordered_json& j) {
  std::string out;
  write(j, out, 0);
  return out + "\n";
}

}  // namespace abelcat::cli
