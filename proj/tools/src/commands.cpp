#include "abelcat/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "abelcat/cli/diagram_file.hpp"
#include "abelcat/cli/gen_io.hpp"
#include "abelcat/cli/pretty_json.hpp"
#include "abelcat/cli/render.hpp"
#include "abelcat/cli/runner.hpp"
#include "abelcat/genprop.hpp"
#include "abelcat/intlin.hpp"

namespace abelcat::cli {

namespace {

/// Thrown from the --version callback to stop parsing before subcommand checks.
struct VersionRequested {};

struct ReadResult {
  bool ok = false;
  std::string text;
};

ReadResult read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return {true, ss.str()};
}

/// Runs `body` on the parsed file and folds input errors into the document.
ReportDocument with_file(const std::string& path,
                         const std::function<std::vector<AssertionOutcome>(const DiagramFile&)>& body) {
  ReportDocument doc;
  doc.version = std::string(tool_version());
  const auto file = read_file(path);
  doc.input_digest = sha256_hex(file.text);
  if (!file.ok) {
    doc.error = InputErrorInfo{"cannot read '" + path + "'", std::nullopt};
    return doc;
  }
  try {
    const DiagramFile df = parse_diagram_file(file.text);
    doc.category = df.category;
    doc.assertions = body(df);
  } catch (const LocatedError& e) {
    doc.assertions.clear();
    doc.error = InputErrorInfo{e.message(), e.pos()};
  } catch (const InputError& e) {
    doc.assertions.clear();
    doc.error = InputErrorInfo{e.what(), std::nullopt};
  }
  return doc;
}

AssertionDecl named_assertion(const DiagramFile& df, AssertionKind kind, const std::vector<std::string>& keys) {
  AssertionDecl a;
  a.kind = kind;
  for (const auto& k : keys) {
    df.morphism(k);  // throws when the file lacks this name
    a.args.push_back(k);
  }
  return a;
}

std::string matrix_string(const intlin::IntMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? "," : "") + m(r, c).str();
    s += "]";
  }
  return s + "]";
}

intlin::IntMatrix parse_matrix_arg(const std::string& text) {
  const Value v = parse_json_subset(text);
  if (v.kind != Value::Kind::Array) throw LocatedError("matrix must be an array of rows", v.pos);
  std::size_t cols = 0;
  std::vector<std::vector<intlin::BigInt>> rows;
  for (std::size_t r = 0; r < v.items.size(); ++r) {
    const Value& row = v.items[r];
    if (row.kind != Value::Kind::Array) throw LocatedError("matrix row must be an array", row.pos);
    if (r == 0) cols = row.items.size();
    if (row.items.size() != cols) throw LocatedError("matrix rows have different lengths", row.pos);
    std::vector<intlin::BigInt> entries;
    for (const auto& e : row.items) {
      if (e.kind != Value::Kind::Integer) throw LocatedError("matrix entries must be integers", e.pos);
      entries.emplace_back(e.text);
    }
    rows.push_back(std::move(entries));
  }
  return intlin::IntMatrix::from_rows(rows, cols);
}

int snf_command(const std::string& matrix_text, OutputFormat format, std::ostream& out, std::ostream& err) {
  intlin::IntMatrix a;
  try {
    a = parse_matrix_arg(matrix_text);
  } catch (const LocatedError& e) {
    err << "abelcat snf: invalid --matrix at column " << e.pos().column << ": " << e.message() << "\n";
    return 2;
  }
  const auto snf = intlin::smith_normal_form(a);
  std::vector<std::string> diag;
  for (const auto& d : snf.diagonal()) diag.push_back(d.str());
  if (format == OutputFormat::Structured) {
    nlohmann::ordered_json j;
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    j["rank"] = snf.rank();
    j["diagonal"] = diag;
    j["U"] = matrix_string(snf.u);
    j["D"] = matrix_string(snf.d);
    j["V"] = matrix_string(snf.v);
    out << pretty_json(j);
  } else {
    out << "A = " << matrix_string(a) << "\n";
    out << "U = " << matrix_string(snf.u) << "\n";
    out << "D = " << matrix_string(snf.d) << "\n";
    out << "V = " << matrix_string(snf.v) << "\n";
    out << "rank " << snf.rank() << ", diagonal [";
    for (std::size_t i = 0; i < diag.size(); ++i) out << (i ? "," : "") << diag[i];
    out << "]\n";
  }
  return 0;
}

struct GenOptions {
  std::string scheme = "split_split";
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::string mode = "monic";
  std::string kind = "ladder";
  std::string out_dir;
  std::size_t max_rank = 2;
  std::vector<std::int64_t> pool{2, 3, 4, 8, 9};
  double perturb = 0.0;
};

int gen_command(const GenOptions& o, std::ostream& out, std::ostream& err) {
  genprop::GenConfig cfg;
  ShortFiveMode mode;
  try {
    cfg.scheme = genprop::parse_scheme(o.scheme);
    mode = parse_short_five_mode(o.mode);
  } catch (const InputError& e) {
    err << "abelcat gen: " << e.what() << "\n";
    return 2;
  }
  if (o.kind != "ladder" && o.kind != "nine") {
    err << "abelcat gen: --kind must be ladder or nine\n";
    return 2;
  }
  cfg.seed = o.seed;
  cfg.max_rank = o.max_rank;
  cfg.factor_pool.assign(o.pool.begin(), o.pool.end());
  cfg.perturb_probability = o.perturb;
  genprop::Rng rng(cfg.seed);
  if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);
  for (std::size_t i = 0; i < o.count; ++i) {
    const std::string doc = o.kind == "ladder"
                                ? ladder_document(genprop::gen_ladder(cfg, mode, rng), mode)
                                : grid_document(genprop::gen_nine_grid(cfg, rng), NineDirection::BottomFromTop);
    if (o.out_dir.empty()) {
      out << doc;
      continue;
    }
    const std::string name = o.kind + "_" + o.scheme + (o.kind == "ladder" ? "_" + o.mode : "") + "_" +
                             std::to_string(o.seed) + "_" + std::to_string(i) + ".json";
    const auto path = std::filesystem::path(o.out_dir) / name;
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      err << "abelcat gen: cannot write " << path.string() << "\n";
      return 2;
    }
    file << doc;
    out << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify diagram lemmas in abelian categories", "abelcat"};
  app.require_subcommand(1);

  std::string format_name = "structured";
  unsigned jobs = 1;
  app.add_option("--format", format_name, "Report renderer")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--jobs", jobs, "Evaluate independent assertions in parallel")->check(CLI::Range(1u, 256u));
  app.add_flag_callback("--version", [] { throw VersionRequested{}; }, "Print the version");

  std::string check_file;
  auto* check = app.add_subcommand("check", "Run every assertion in a diagram file");
  check->add_option("file", check_file, "Diagram file")->required();

  auto* lemma = app.add_subcommand("lemma", "Run a lemma verifier on a diagram file");
  lemma->require_subcommand(1);
  std::string sf_file, sf_mode = "monic";
  bool sf_trace = false;
  auto* short_five = lemma->add_subcommand("short-five", "Short five lemma on morphisms f, g, f_prime, g_prime, "
                                                         "alpha, beta, gamma");
  short_five->add_option("file", sf_file, "Diagram file")->required();
  short_five->add_option("--mode", sf_mode, "monic, epic or iso")->check(CLI::IsMember({"monic", "epic", "iso"}));
  short_five->add_flag("--trace", sf_trace, "Execute the pullback argument step by step (monic mode)");
  std::string nine_file, nine_dir = "bottom_from_top";
  auto* nine = lemma->add_subcommand("nine", "Nine lemma on morphisms f1..g3, alpha1..gamma2");
  nine->add_option("file", nine_file, "Diagram file")->required();
  nine->add_option("--direction", nine_dir, "top_from_bottom or bottom_from_top")
      ->check(CLI::IsMember({"top_from_bottom", "bottom_from_top"}));

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Emit generated instances as diagram files");
  gen->add_option("--scheme", gen_opts.scheme, "split_split, epi_kernel_top_split_bottom or conjugated");
  gen->add_option("--seed", gen_opts.seed, "Generator seed");
  gen->add_option("--count", gen_opts.count, "Number of instances");
  gen->add_option("--mode", gen_opts.mode, "Short five mode for ladders");
  gen->add_option("--kind", gen_opts.kind, "ladder or nine");
  gen->add_option("--out-dir", gen_opts.out_dir, "Write one file per instance here instead of stdout");
  gen->add_option("--max-rank", gen_opts.max_rank, "Largest number of invariant factors per object");
  gen->add_option("--pool", gen_opts.pool, "Invariant factor pool (0 = Z)")->delimiter(',');
  gen->add_option("--perturb", gen_opts.perturb, "Chance of dropping the mode property from α or γ")
      ->check(CLI::Range(0.0, 1.0));

  std::string snf_matrix;
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("--matrix", snf_matrix, "Rows as nested arrays, e.g. [[2,4],[6,8]]")->required();

  for (auto* sub : {check, lemma, short_five, nine, gen, snf}) sub->fallthrough();

  std::vector<std::string> argv_storage{"abelcat"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const VersionRequested&) {
    out << "abelcat " << tool_version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const OutputFormat format = format_name == "text" ? OutputFormat::Text : OutputFormat::Structured;
  try {
    if (*check) {
      const auto doc = with_file(check_file, [&](const DiagramFile& df) { return run_file(df, jobs); });
      out << render(doc, format);
      return doc.exit_code();
    }
    if (*short_five) {
      if (sf_trace && sf_mode != "monic") {
        err << "abelcat lemma short-five: --trace runs the monic case only\n";
        return 2;
      }
      const auto doc = with_file(sf_file, [&](const DiagramFile& df) {
        auto a = named_assertion(df, sf_trace ? AssertionKind::ShortFiveTrace : AssertionKind::ShortFive,
                                 ladder_keys());
        a.mode = parse_short_five_mode(sf_mode);
        return std::vector<AssertionOutcome>{run_assertion(df, a)};
      });
      out << render(doc, format);
      return doc.exit_code();
    }
    if (*nine) {
      const auto doc = with_file(nine_file, [&](const DiagramFile& df) {
        auto a = named_assertion(df, AssertionKind::NineLemma, grid_keys());
        a.direction = parse_nine_direction(nine_dir);
        return std::vector<AssertionOutcome>{run_assertion(df, a)};
      });
      out << render(doc, format);
      return doc.exit_code();
    }
    if (*gen) return gen_command(gen_opts, out, err);
    if (*snf) return snf_command(snf_matrix, format, out, err);
  } catch (const std::exception& e) {
    err << "abelcat: internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace abelcat::cli
