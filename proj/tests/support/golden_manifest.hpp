#pragma once

// The golden corpus manifest: one entry per CLI invocation, with the exit
// code it must return. Expected stdout lives in expected/<name>.out and case
// files in cases/. An argument "@x.json" names cases/x.json.

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace abelcat::test_support {

struct GoldenEntry {
  std::string name;
  std::vector<std::string> args;  // with @ references resolved to absolute paths
  int exit_code = 0;
};

/// Lets test frameworks name a parameterized case by its entry name.
inline void PrintTo(const GoldenEntry& e, std::ostream* os) { *os << e.name; }

inline std::string read_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::filesystem::path golden_dir() { return ABELCAT_GOLDEN_DIR; }

inline std::filesystem::path expected_path(const GoldenEntry& e) {
  return golden_dir() / "expected" / (e.name + ".out");
}

inline std::vector<GoldenEntry> load_manifest() {
  const auto root = golden_dir();
  const auto doc = nlohmann::json::parse(read_bytes(root / "manifest.json"));
  std::vector<GoldenEntry> out;
  for (const auto& item : doc) {
    GoldenEntry e;
    e.name = item.at("name").get<std::string>();
    e.exit_code = item.at("exit_code").get<int>();
    for (const auto& a : item.at("args")) {
      auto s = a.get<std::string>();
      if (!s.empty() && s[0] == '@') s = (root / "cases" / s.substr(1)).string();
      e.args.push_back(std::move(s));
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace abelcat::test_support
