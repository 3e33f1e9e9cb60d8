#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace abelcat::cli {

/// Two-space indented JSON where arrays holding no objects stay on one
/// line, so matrices read as rows. Ends with a newline.
std::string pretty_json(const nlohmann::ordered_json& j);

}  // namespace abelcat::cli
