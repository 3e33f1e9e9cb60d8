#include "abelcat/cli/gen_io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "abelcat/cli/diagram_file.hpp"
#include "abelcat/cli/pretty_json.hpp"

namespace abelcat::cli {

using nlohmann::ordered_json;

namespace {

std::int64_t to_i64(const intlin::BigInt& x) {
  if (x < std::numeric_limits<std::int64_t>::min() || x > std::numeric_limits<std::int64_t>::max()) {
    throw std::out_of_range("generated entry does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

ordered_json factors_json(const fgab::FgGroup& g) {
  ordered_json arr = ordered_json::array();
  for (const auto& d : g.invariant_factors()) arr.push_back(to_i64(d));
  return arr;
}

ordered_json matrix_json(const intlin::IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_i64(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct Named {
  std::string name;
  const fgab::GroupHom* hom;
  std::string src;
  std::string dst;
};

ordered_json document(const std::vector<std::pair<std::string, fgab::FgGroup>>& objects,
                      const std::vector<Named>& morphisms, ordered_json assertions) {
  ordered_json doc;
  doc["category"] = "fgab";
  ordered_json objs = ordered_json::object();
  for (const auto& [name, g] : objects) objs[name] = factors_json(g);
  doc["objects"] = std::move(objs);
  ordered_json ms = ordered_json::object();
  for (const auto& m : morphisms) {
    ordered_json mj;
    mj["src"] = m.src;
    mj["dst"] = m.dst;
    mj["matrix"] = matrix_json(m.hom->matrix());
    ms[m.name] = std::move(mj);
  }
  doc["morphisms"] = std::move(ms);
  doc["assertions"] = std::move(assertions);
  return doc;
}

ordered_json named_args(const std::vector<std::string>& keys) {
  ordered_json args = ordered_json::object();
  for (const auto& k : keys) args[k] = k;
  return args;
}

}  // namespace

std::string ladder_document(const SesLadder<fgab::GroupHom>& l, ShortFiveMode mode) {
  const std::vector<std::pair<std::string, fgab::FgGroup>> objects{
      {"A", l.f.src()},        {"B", l.f.dst()},        {"C", l.g.dst()},
      {"A_prime", l.f_prime.src()}, {"B_prime", l.f_prime.dst()}, {"C_prime", l.g_prime.dst()}};
  const std::vector<Named> morphisms{
      {"f", &l.f, "A", "B"},
      {"g", &l.g, "B", "C"},
      {"f_prime", &l.f_prime, "A_prime", "B_prime"},
      {"g_prime", &l.g_prime, "B_prime", "C_prime"},
      {"alpha", &l.alpha, "A", "A_prime"},
      {"beta", &l.beta, "B", "B_prime"},
      {"gamma", &l.gamma, "C", "C_prime"},
  };
  ordered_json assertions = ordered_json::array();
  ordered_json sf;
  sf["kind"] = "short_five";
  sf["args"] = named_args(ladder_keys());
  sf["mode"] = std::string(to_string(mode));
  assertions.push_back(std::move(sf));
  if (mode == ShortFiveMode::Monic) {
    ordered_json tr;
    tr["kind"] = "short_five_trace";
    tr["args"] = named_args(ladder_keys());
    assertions.push_back(std::move(tr));
  }
  return pretty_json(document(objects, morphisms, std::move(assertions)));
}

std::string grid_document(const NineGrid<fgab::GroupHom>& grid, NineDirection direction) {
  std::vector<std::pair<std::string, fgab::FgGroup>> objects;
  std::vector<Named> morphisms;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string k = std::to_string(i + 1);
    objects.emplace_back("A" + k, grid.f[i].src());
    objects.emplace_back("B" + k, grid.f[i].dst());
    objects.emplace_back("C" + k, grid.g[i].dst());
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string k = std::to_string(i + 1);
    morphisms.push_back({"f" + k, &grid.f[i], "A" + k, "B" + k});
    morphisms.push_back({"g" + k, &grid.g[i], "B" + k, "C" + k});
  }
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string k = std::to_string(i + 1), k1 = std::to_string(i + 2);
    morphisms.push_back({"alpha" + k, &grid.alpha[i], "A" + k, "A" + k1});
  }
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string k = std::to_string(i + 1), k1 = std::to_string(i + 2);
    morphisms.push_back({"beta" + k, &grid.beta[i], "B" + k, "B" + k1});
  }
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string k = std::to_string(i + 1), k1 = std::to_string(i + 2);
    morphisms.push_back({"gamma" + k, &grid.gamma[i], "C" + k, "C" + k1});
  }
  ordered_json assertions = ordered_json::array();
  ordered_json nl;
  nl["kind"] = "nine_lemma";
  nl["args"] = named_args(grid_keys());
  nl["direction"] = std::string(to_string(direction));
  assertions.push_back(std::move(nl));
  return pretty_json(document(objects, morphisms, std::move(assertions)));
}

}  // namespace abelcat::cli
