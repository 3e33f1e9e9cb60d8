#include "abelcat/cli/runner.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <thread>

#include <openssl/evp.h>

#include "abelcat/abcat.hpp"
#include "abelcat/diagram.hpp"
#include "abelcat/fgab.hpp"
#include "abelcat/vecfp.hpp"

#ifndef ABELCAT_VERSION
#define ABELCAT_VERSION "0.0.0"
#endif

namespace abelcat::cli {

using intlin::BigInt;

bool ReportDocument::passed() const {
  if (error) return false;
  for (const auto& a : assertions)
    if (!a.report.passed()) return false;
  return true;
}

int ReportDocument::exit_code() const {
  if (error) return 2;
  return passed() ? 0 : 1;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xF];
  }
  return out;
}

std::string_view tool_version() { return ABELCAT_VERSION; }

std::string_view to_string(CategoryTag c) { return c == CategoryTag::Fgab ? "fgab" : "vecfp"; }

namespace {

template <AbelianCategory C>
struct Context {
  C cat;
  std::map<std::string, typename C::Object> objects;
  std::map<std::string, typename C::Morphism> morphisms;

  const typename C::Morphism& morphism(const std::string& name) const { return morphisms.at(name); }
};

Context<fgab::FgAb> build_fgab(const DiagramFile& df) {
  Context<fgab::FgAb> ctx{fgab::FgAb{}, {}, {}};
  for (const auto& o : df.objects) ctx.objects.emplace(o.name, fgab::FgGroup::from_canonical(o.factors));
  for (const auto& m : df.morphisms) {
    const auto& src = ctx.objects.at(m.src);
    const auto& dst = ctx.objects.at(m.dst);
    intlin::IntMatrix matrix(dst.rank(), src.rank());
    for (std::size_t r = 0; r < m.rows.size(); ++r)
      for (std::size_t c = 0; c < m.rows[r].size(); ++c) matrix(r, c) = m.rows[r][c];
    try {
      ctx.morphisms.emplace(m.name, fgab::make_hom(src, dst, matrix));
    } catch (const fgab::NotAHomomorphism& e) {
      throw LocatedError("morphism '" + m.name + "' is " + e.what(), m.entry_pos[e.row()][e.col()]);
    } catch (const InputError& e) {
      throw LocatedError("morphism '" + m.name + "': " + e.what(), m.matrix_pos);
    }
  }
  return ctx;
}

Context<vecfp::FpVect> build_vecfp(const DiagramFile& df) {
  Context<vecfp::FpVect> ctx{vecfp::FpVect(df.prime), {}, {}};
  for (const auto& o : df.objects) ctx.objects.emplace(o.name, vecfp::make_space(df.prime, o.dim));
  const BigInt p = df.prime;
  for (const auto& m : df.morphisms) {
    const auto& src = ctx.objects.at(m.src);
    const auto& dst = ctx.objects.at(m.dst);
    vecfp::FpMatrix matrix(dst.dim, src.dim);
    for (std::size_t r = 0; r < m.rows.size(); ++r)
      for (std::size_t c = 0; c < m.rows[r].size(); ++c) {
        BigInt x = m.rows[r][c] % p;
        if (x < 0) x += p;
        matrix(r, c) = static_cast<vecfp::Scalar>(x);
      }
    ctx.morphisms.emplace(m.name, vecfp::make_map(src, dst, matrix));
  }
  return ctx;
}

template <AbelianCategory C>
VerificationReport evaluate(const Context<C>& ctx, const DiagramFile& df, const AssertionDecl& a) {
  const C& cat = ctx.cat;
  auto m = [&](std::size_t i) -> const typename C::Morphism& { return ctx.morphism(a.args[i]); };
  switch (a.kind) {
    case AssertionKind::Commutes: {
      Diagram<C> d(cat);
      std::vector<std::string> declared;
      auto declare = [&](const std::string& name) {
        for (const auto& n : declared)
          if (n == name) return;
        declared.push_back(name);
      };
      for (const auto& name : a.args) {
        declare(df.morphism(name).src);
        declare(df.morphism(name).dst);
      }
      // File order keeps path enumeration deterministic.
      for (const auto& o : df.objects)
        for (const auto& n : declared)
          if (n == o.name) d.add_object(o.name, ctx.objects.at(o.name));
      for (const auto& name : a.args) d.add_morphism(name, df.morphism(name).src, df.morphism(name).dst, ctx.morphism(name));
      return check_commutes(d);
    }
    case AssertionKind::ExactAt: {
      VerificationReport r;
      r.kind = "exact_at";
      const bool exact = is_exact_at(cat, m(0), m(1));
      std::string diagnostic;
      if (!exact) {
        diagnostic = is_zero_morphism(cat, cat.compose(m(1), m(0))) ? "img " + a.args[0] + " ≠ ker " + a.args[1]
                                                                     : a.args[1] + "∘" + a.args[0] + " ≠ 0";
      }
      r.conclusions.push_back({"exact at " + df.morphism(a.args[0]).dst, exact, diagnostic});
      return r;
    }
    case AssertionKind::ShortExact: {
      VerificationReport r;
      r.kind = "short_exact";
      const auto result = is_short_exact(cat, m(0), m(1));
      r.conclusions.push_back({"short exact", result.exact, row_diagnostic(result.forms, a.args[0], a.args[1])});
      return r;
    }
    case AssertionKind::ShortFive:
    case AssertionKind::ShortFiveTrace: {
      SesLadder<typename C::Morphism> l{m(0), m(1), m(2), m(3), m(4), m(5), m(6)};
      if (a.kind == AssertionKind::ShortFiveTrace) return short_five_trace(cat, l);
      return verify_short_five(cat, l, a.mode);
    }
    case AssertionKind::NineLemma: {
      NineGrid<typename C::Morphism> grid;
      for (std::size_t i = 0; i < 3; ++i) {
        grid.f[i] = m(2 * i);
        grid.g[i] = m(2 * i + 1);
      }
      for (std::size_t i = 0; i < 2; ++i) {
        grid.alpha[i] = m(6 + i);
        grid.beta[i] = m(8 + i);
        grid.gamma[i] = m(10 + i);
      }
      return verify_nine_lemma(cat, grid, a.direction);
    }
  }
  throw std::logic_error("evaluate: bad assertion kind");
}

template <AbelianCategory C>
AssertionOutcome outcome(const Context<C>& ctx, const DiagramFile& df, const AssertionDecl& a) {
  AssertionOutcome o;
  o.kind = a.kind;
  o.args = a.args;
  if (a.kind == AssertionKind::ShortFive) o.mode = a.mode;
  if (a.kind == AssertionKind::NineLemma) o.direction = a.direction;
  try {
    o.report = evaluate(ctx, df, a);
  } catch (const LocatedError&) {
    throw;
  } catch (const InputError& e) {
    throw LocatedError(std::string(to_string(a.kind)) + ": " + e.what(), a.pos);
  }
  return o;
}

template <AbelianCategory C>
std::vector<AssertionOutcome> run_all(const Context<C>& ctx, const DiagramFile& df, unsigned jobs) {
  const std::size_t n = df.assertions.size();
  std::vector<AssertionOutcome> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = outcome(ctx, df, df.assertions[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  // The first failure in file order wins, whatever the scheduling.
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace

std::vector<AssertionOutcome> run_file(const DiagramFile& df, unsigned jobs) {
  if (df.category == CategoryTag::Fgab) return run_all(build_fgab(df), df, jobs);
  return run_all(build_vecfp(df), df, jobs);
}

AssertionOutcome run_assertion(const DiagramFile& df, const AssertionDecl& assertion) {
  if (df.category == CategoryTag::Fgab) return outcome(build_fgab(df), df, assertion);
  return outcome(build_vecfp(df), df, assertion);
}

ReportDocument check_text(std::string_view text, unsigned jobs) {
  ReportDocument doc;
  doc.version = std::string(tool_version());
  doc.input_digest = sha256_hex(text);
  try {
    const DiagramFile df = parse_diagram_file(text);
    doc.category = df.category;
    doc.assertions = run_file(df, jobs);
  } catch (const LocatedError& e) {
    doc.assertions.clear();
    doc.error = InputErrorInfo{e.message(), e.pos()};
  } catch (const InputError& e) {
    doc.assertions.clear();
    doc.error = InputErrorInfo{e.what(), std::nullopt};
  }
  return doc;
}

}  // namespace abelcat::cli
