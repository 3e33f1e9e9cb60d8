#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "abelcat/abcat.hpp"
#include "abelcat/cli/commands.hpp"
#include "abelcat/cli/diagram_file.hpp"
#include "abelcat/diagram.hpp"
#include "abelcat/fgab.hpp"
#include "abelcat/vecfp.hpp"
#include "golden_manifest.hpp"

namespace {

using namespace abelcat;
using test_support::GoldenEntry;

bool updating() { return std::getenv("ABELCAT_UPDATE_GOLDEN") != nullptr; }

class Golden : public ::testing::TestWithParam<GoldenEntry> {};

TEST_P(Golden, OutputAndExitCodeMatch) {
  const auto& entry = GetParam();
  std::ostringstream out, err;
  const int code = cli::run_main(entry.args, out, err);
  EXPECT_EQ(code, entry.exit_code) << err.str();
  const auto path = test_support::expected_path(entry);
  if (updating()) {
    std::ofstream(path, std::ios::binary) << out.str();
    return;
  }
  ASSERT_TRUE(std::filesystem::exists(path)) << "missing " << path << "; rerun with ABELCAT_UPDATE_GOLDEN=1";
  EXPECT_EQ(out.str(), test_support::read_bytes(path));
}

TEST_P(Golden, RepeatedRunsAreByteIdentical) {
  const auto& entry = GetParam();
  std::ostringstream a, b, err;
  cli::run_main(entry.args, a, err);
  cli::run_main(entry.args, b, err);
  EXPECT_EQ(a.str(), b.str());
}

INSTANTIATE_TEST_SUITE_P(Corpus, Golden, ::testing::ValuesIn(test_support::load_manifest()),
                         [](const auto& info) { return info.param.name; });

// Rebuilds each passing-or-failing case through the library API, parsing the
// file with a general JSON reader, and compares verdicts with the CLI report.

template <class Cat, class MakeObject, class MakeMorphism>
std::vector<VerificationReport> evaluate_directly(const Cat& cat, const nlohmann::ordered_json& doc,
                                                  MakeObject make_object, MakeMorphism make_morphism) {
  using Object = typename Cat::Object;
  using Morphism = typename Cat::Morphism;
  std::map<std::string, Object> objects;
  std::vector<std::string> object_order;
  for (const auto& [name, decl] : doc.at("objects").items()) {
    objects.emplace(name, make_object(decl));
    object_order.push_back(name);
  }
  std::map<std::string, Morphism> morphisms;
  std::map<std::string, std::pair<std::string, std::string>> ends;
  if (doc.contains("morphisms")) {
    for (const auto& [name, decl] : doc.at("morphisms").items()) {
      const auto s = decl.at("src").template get<std::string>();
      const auto d = decl.at("dst").template get<std::string>();
      morphisms.emplace(name, make_morphism(objects.at(s), objects.at(d), decl.at("matrix")));
      ends[name] = {s, d};
    }
  }
  std::vector<VerificationReport> reports;
  if (!doc.contains("assertions")) return reports;
  for (const auto& a : doc.at("assertions")) {
    const auto kind = a.at("kind").template get<std::string>();
    std::vector<std::string> args;
    if (a.at("args").is_array()) {
      args = a.at("args").template get<std::vector<std::string>>();
    } else {
      const auto& keys = kind == "nine_lemma" ? cli::grid_keys() : cli::ladder_keys();
      for (const auto& k : keys) args.push_back(a.at("args").at(k).template get<std::string>());
    }
    auto m = [&](std::size_t i) { return morphisms.at(args[i]); };
    if (kind == "commutes") {
      Diagram<Cat> d(cat);
      for (const auto& o : object_order) {
        bool used = false;
        for (const auto& n : args) used = used || ends[n].first == o || ends[n].second == o;
        if (used) d.add_object(o, objects.at(o));
      }
      for (const auto& n : args) d.add_morphism(n, ends[n].first, ends[n].second, morphisms.at(n));
      reports.push_back(check_commutes(d));
    } else if (kind == "exact_at") {
      VerificationReport r;
      r.conclusions.push_back({"exact", is_exact_at(cat, m(0), m(1)), ""});
      reports.push_back(r);
    } else if (kind == "short_exact") {
      VerificationReport r;
      r.conclusions.push_back({"short exact", is_short_exact(cat, m(0), m(1)).exact, ""});
      reports.push_back(r);
    } else if (kind == "short_five" || kind == "short_five_trace") {
      SesLadder<Morphism> l{m(0), m(1), m(2), m(3), m(4), m(5), m(6)};
      if (kind == "short_five_trace") {
        reports.push_back(short_five_trace(cat, l));
      } else {
        reports.push_back(verify_short_five(cat, l, parse_short_five_mode(a.value("mode", "monic"))));
      }
    } else if (kind == "nine_lemma") {
      NineGrid<Morphism> grid;
      for (std::size_t i = 0; i < 3; ++i) {
        grid.f[i] = m(2 * i);
        grid.g[i] = m(2 * i + 1);
      }
      for (std::size_t i = 0; i < 2; ++i) {
        grid.alpha[i] = m(6 + i);
        grid.beta[i] = m(8 + i);
        grid.gamma[i] = m(10 + i);
      }
      reports.push_back(
          verify_nine_lemma(cat, grid, parse_nine_direction(a.value("direction", "bottom_from_top"))));
    }
  }
  return reports;
}

std::vector<VerificationReport> evaluate_case(const nlohmann::ordered_json& doc) {
  if (doc.at("category") == "fgab") {
    return evaluate_directly(
        fgab::FgAb{}, doc,
        [](const nlohmann::ordered_json& decl) {
          std::vector<intlin::BigInt> factors;
          for (const auto& x : decl) factors.emplace_back(x.get<long long>());
          return fgab::FgGroup::from_canonical(factors);
        },
        [](const fgab::FgGroup& s, const fgab::FgGroup& d, const nlohmann::ordered_json& rows) {
          intlin::IntMatrix m(d.rank(), s.rank());
          for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c].get<long long>();
          return fgab::make_hom(s, d, m);
        });
  }
  const auto p = doc.at("prime").get<std::uint64_t>();
  return evaluate_directly(
      vecfp::FpVect(p), doc, [p](const nlohmann::ordered_json& decl) { return vecfp::make_space(p, decl.get<std::size_t>()); },
      [p](const vecfp::FpSpace& s, const vecfp::FpSpace& d, const nlohmann::ordered_json& rows) {
        vecfp::FpMatrix m(d.dim, s.dim);
        for (std::size_t r = 0; r < rows.size(); ++r)
          for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const long long x = rows[r][c].get<long long>() % static_cast<long long>(p);
            m(r, c) = static_cast<vecfp::Scalar>(x < 0 ? x + static_cast<long long>(p) : x);
          }
        return vecfp::make_map(s, d, m);
      });
}

TEST(GoldenRoundTrip, LibraryVerdictsEqualReportedVerdicts) {
  std::size_t compared = 0;
  for (const auto& entry : test_support::load_manifest()) {
    if (entry.args.size() != 2 || entry.args[0] != "check" || entry.exit_code == 2) continue;
    SCOPED_TRACE(entry.name);
    const auto doc = nlohmann::ordered_json::parse(test_support::read_bytes(entry.args[1]));
    const auto direct = evaluate_case(doc);
    const auto report = nlohmann::json::parse(test_support::read_bytes(test_support::expected_path(entry)));
    const auto& reported = report.at("assertions");
    ASSERT_EQ(direct.size(), reported.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
      EXPECT_EQ(std::string(to_string(direct[i].status())), reported[i].at("status").get<std::string>());
      ASSERT_EQ(direct[i].hypotheses.size(), reported[i].at("hypotheses").size());
      for (std::size_t h = 0; h < direct[i].hypotheses.size(); ++h)
        EXPECT_EQ(direct[i].hypotheses[h].passed, reported[i].at("hypotheses")[h].at("passed").get<bool>());
      ASSERT_EQ(direct[i].conclusions.size(), reported[i].at("conclusions").size());
      for (std::size_t c = 0; c < direct[i].conclusions.size(); ++c)
        EXPECT_EQ(direct[i].conclusions[c].passed, reported[i].at("conclusions")[c].at("passed").get<bool>());
    }
    ++compared;
  }
  EXPECT_GE(compared, 15u);
}

}  // namespace
