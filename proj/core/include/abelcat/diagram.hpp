#pragma once

// Diagrams, commutativity checking and the lemma verifiers. Every verifier
// checks its hypotheses on the concrete instance instead of trusting the
// caller, and reports are plain data (see report.hpp).

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abelcat/abcat.hpp"
#include "abelcat/category.hpp"
#include "abelcat/errors.hpp"
#include "abelcat/report.hpp"

namespace abelcat {

template <AbelianCategory C>
class Diagram {
 public:
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;

  struct Edge {
    std::string name;
    std::size_t src;
    std::size_t dst;
    Morphism morphism;
  };

  explicit Diagram(C cat) : cat_(std::move(cat)) {}

  const C& category() const { return cat_; }

  std::size_t add_object(const std::string& name, Object obj) {
    if (index_.count(name)) throw InputError("duplicate object '" + name + "'");
    index_.emplace(name, names_.size());
    names_.push_back(name);
    objects_.push_back(std::move(obj));
    return names_.size() - 1;
  }

  void add_morphism(const std::string& name, const std::string& src, const std::string& dst, Morphism m) {
    for (const auto& e : edges_)
      if (e.name == name) throw InputError("duplicate morphism '" + name + "'");
    const std::size_t s = require_object(src, name);
    const std::size_t d = require_object(dst, name);
    if (!cat_.object_equal(cat_.source(m), objects_[s]) || !cat_.object_equal(cat_.target(m), objects_[d])) {
      throw InputError("morphism '" + name + "' does not run " + src + " → " + dst);
    }
    edges_.push_back({name, s, d, std::move(m)});
  }

  std::size_t object_count() const { return names_.size(); }
  const std::string& object_name(std::size_t i) const { return names_[i]; }
  const Object& object(std::size_t i) const { return objects_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::size_t require_object(const std::string& name, const std::string& for_morphism) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
      throw InputError("morphism '" + for_morphism + "' references undeclared object '" + name + "'");
    }
    return it->second;
  }

  C cat_;
  std::vector<std::string> names_;
  std::vector<Object> objects_;
  std::map<std::string, std::size_t> index_;
  std::vector<Edge> edges_;
};

/// Compares the composites of all directed paths between every ordered pair
/// of objects. Identity self-loops are dropped first; any remaining cycle is
/// an input error.
template <AbelianCategory C>
VerificationReport check_commutes(const Diagram<C>& d) {
  const C& cat = d.category();
  const std::size_t n = d.object_count();
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t k = 0; k < d.edges().size(); ++k) {
    const auto& e = d.edges()[k];
    if (e.src == e.dst) {
      if (cat.morphism_equal(e.morphism, cat.identity(d.object(e.src)))) continue;
      throw InputError("diagram has a cycle: '" + e.name + "' is a non-identity loop at " + d.object_name(e.src));
    }
    out[e.src].push_back(k);
  }

  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> state(n, 0);
  std::function<void(std::size_t)> visit = [&](std::size_t u) {
    state[u] = 1;
    for (auto k : out[u]) {
      const std::size_t v = d.edges()[k].dst;
      if (state[v] == 1) throw InputError("diagram has a cycle through " + d.object_name(v));
      if (state[v] == 0) visit(v);
    }
    state[u] = 2;
  };
  for (std::size_t u = 0; u < n; ++u)
    if (state[u] == 0) visit(u);

  struct Path {
    std::string label;
    typename C::Morphism composite;
  };

  VerificationReport report;
  report.kind = "commutes";
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<std::vector<Path>> paths_to(n);
    std::function<void(std::size_t, const Path&)> walk = [&](std::size_t at, const Path& so_far) {
      for (auto k : out[at]) {
        const auto& e = d.edges()[k];
        Path next{so_far.label.empty() ? e.name : e.name + "∘" + so_far.label,
                  so_far.label.empty() ? e.morphism : cat.compose(e.morphism, so_far.composite)};
        paths_to[e.dst].push_back(next);
        walk(e.dst, next);
      }
    };
    walk(u, Path{"", cat.identity(d.object(u))});
    for (std::size_t v = 0; v < n; ++v) {
      const auto& ps = paths_to[v];
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
          Check c{ps[i].label + " = " + ps[j].label, cat.morphism_equal(ps[i].composite, ps[j].composite), ""};
          if (!c.passed) {
            c.diagnostic = d.object_name(u) + " → " + d.object_name(v) + ": " + ps[i].label + " and " +
                           ps[j].label + " differ";
          }
          report.conclusions.push_back(std::move(c));
        }
    }
  }
  return report;
}

/// The short-five ladder
///   A  --f-->  B  --g-->  C
///   |α         |β         |γ
///   A′ --f′--> B′ --g′--> C′
template <class Morphism>
struct SesLadder {
  Morphism f, g, f_prime, g_prime, alpha, beta, gamma;
};

/// The 3×3 grid with rows A_i → B_i → C_i (f_i, g_i) and columns
/// X_1 → X_2 → X_3 (α_i, β_i, γ_i). Indices here are zero-based.
template <class Morphism>
struct NineGrid {
  std::array<Morphism, 3> f, g;
  std::array<Morphism, 2> alpha, beta, gamma;
};

template <AbelianCategory C>
void validate_ladder(const C& cat, const SesLadder<typename C::Morphism>& l) {
  auto same = [&](const auto& x, const auto& y, const char* what) {
    if (!cat.object_equal(x, y)) throw InputError(std::string("ladder endpoints inconsistent: ") + what);
  };
  same(cat.target(l.f), cat.source(l.g), "codomain f ≠ domain g");
  same(cat.target(l.f_prime), cat.source(l.g_prime), "codomain f′ ≠ domain g′");
  same(cat.source(l.alpha), cat.source(l.f), "α must start at A");
  same(cat.target(l.alpha), cat.source(l.f_prime), "α must end at A′");
  same(cat.source(l.beta), cat.target(l.f), "β must start at B");
  same(cat.target(l.beta), cat.target(l.f_prime), "β must end at B′");
  same(cat.source(l.gamma), cat.target(l.g), "γ must start at C");
  same(cat.target(l.gamma), cat.target(l.g_prime), "γ must end at C′");
}

template <AbelianCategory C>
void validate_grid(const C& cat, const NineGrid<typename C::Morphism>& grid) {
  auto same = [&](const auto& x, const auto& y, const std::string& what) {
    if (!cat.object_equal(x, y)) throw InputError("nine grid endpoints inconsistent: " + what);
  };
  for (std::size_t i = 0; i < 3; ++i) {
    same(cat.target(grid.f[i]), cat.source(grid.g[i]), "row " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string k = std::to_string(i + 1);
    same(cat.source(grid.alpha[i]), cat.source(grid.f[i]), "α" + k + " domain");
    same(cat.target(grid.alpha[i]), cat.source(grid.f[i + 1]), "α" + k + " codomain");
    same(cat.source(grid.beta[i]), cat.target(grid.f[i]), "β" + k + " domain");
    same(cat.target(grid.beta[i]), cat.target(grid.f[i + 1]), "β" + k + " codomain");
    same(cat.source(grid.gamma[i]), cat.target(grid.g[i]), "γ" + k + " domain");
    same(cat.target(grid.gamma[i]), cat.target(grid.g[i + 1]), "γ" + k + " codomain");
  }
}

/// The ladder as a six-object diagram for check_commutes.
template <AbelianCategory C>
Diagram<C> ladder_diagram(const C& cat, const SesLadder<typename C::Morphism>& l) {
  validate_ladder(cat, l);
  Diagram<C> d(cat);
  d.add_object("A", cat.source(l.f));
  d.add_object("B", cat.target(l.f));
  d.add_object("C", cat.target(l.g));
  d.add_object("A′", cat.source(l.f_prime));
  d.add_object("B′", cat.target(l.f_prime));
  d.add_object("C′", cat.target(l.g_prime));
  d.add_morphism("f", "A", "B", l.f);
  d.add_morphism("g", "B", "C", l.g);
  d.add_morphism("f′", "A′", "B′", l.f_prime);
  d.add_morphism("g′", "B′", "C′", l.g_prime);
  d.add_morphism("α", "A", "A′", l.alpha);
  d.add_morphism("β", "B", "B′", l.beta);
  d.add_morphism("γ", "C", "C′", l.gamma);
  return d;
}

/// Raw outcome of a short-five evaluation, before labelling.
struct ShortFiveFacts {
  ExactnessForms top;
  ExactnessForms bottom;
  bool left_square = false;   // f′∘α = β∘f
  bool right_square = false;  // g′∘β = γ∘g
  bool alpha = false;
  bool gamma = false;
  std::optional<bool> beta;           // set only when every hypothesis holds
  std::optional<bool> beta_inverse;   // iso mode: two-sided inverse verified
};

/// Translates facts computed on the reversed ladder in the opposite
/// category back to the original ladder.
ShortFiveFacts dualize(const ShortFiveFacts& op);

/// First failing short-exactness clause of a row, or empty.
std::string row_diagnostic(const ExactnessForms& forms, std::string_view f, std::string_view g);

VerificationReport short_five_report(const ShortFiveFacts& facts, ShortFiveMode mode, std::string kind);

namespace detail {

template <AbelianCategory C>
bool has_property(const C& cat, const typename C::Morphism& m, ShortFiveMode mode) {
  switch (mode) {
    case ShortFiveMode::Monic:
      return is_monic(cat, m);
    case ShortFiveMode::Epic:
      return is_epic(cat, m);
    case ShortFiveMode::Iso:
      return is_monic(cat, m) && is_epic(cat, m);
  }
  return false;
}

template <AbelianCategory C>
ExactnessForms checked_forms(const C& cat, const typename C::Morphism& f, const typename C::Morphism& g) {
  auto forms = exactness_forms(cat, f, g);
  if (!forms.agree()) throw std::logic_error("exactness forms disagree on " + cat.describe(f));
  return forms;
}

template <AbelianCategory C>
bool commutes(const C& cat, const typename C::Morphism& p1, const typename C::Morphism& q1,
              const typename C::Morphism& p2, const typename C::Morphism& q2) {
  return cat.morphism_equal(cat.compose(p1, q1), cat.compose(p2, q2));
}

}  // namespace detail

template <AbelianCategory C>
ShortFiveFacts short_five_facts(const C& cat, const SesLadder<typename C::Morphism>& l, ShortFiveMode mode) {
  validate_ladder(cat, l);
  ShortFiveFacts facts;
  facts.top = detail::checked_forms(cat, l.f, l.g);
  facts.bottom = detail::checked_forms(cat, l.f_prime, l.g_prime);
  facts.left_square = detail::commutes(cat, l.f_prime, l.alpha, l.beta, l.f);
  facts.right_square = detail::commutes(cat, l.g_prime, l.beta, l.gamma, l.g);
  facts.alpha = detail::has_property(cat, l.alpha, mode);
  facts.gamma = detail::has_property(cat, l.gamma, mode);
  if (facts.top.clause_form && facts.bottom.clause_form && facts.left_square && facts.right_square && facts.alpha &&
      facts.gamma) {
    facts.beta = detail::has_property(cat, l.beta, mode);
    if (mode == ShortFiveMode::Iso && *facts.beta) {
      auto cls = classify_morphism(cat, l.beta);
      const auto& inv = *cls.inverse;
      facts.beta_inverse = cat.morphism_equal(cat.compose(l.beta, inv), cat.identity(cat.target(l.beta))) &&
                           cat.morphism_equal(cat.compose(inv, l.beta), cat.identity(cat.source(l.beta)));
    }
  }
  return facts;
}

template <AbelianCategory C>
VerificationReport verify_short_five(const C& cat, const SesLadder<typename C::Morphism>& l, ShortFiveMode mode) {
  return short_five_report(short_five_facts(cat, l, mode), mode, "short_five");
}

/// The same ladder read in C^op. Rows reverse and trade places, α and γ
/// trade places, β stays.
template <class Morphism>
SesLadder<Morphism> reversed_ladder(const SesLadder<Morphism>& l) {
  return {l.g_prime, l.f_prime, l.g, l.f, l.gamma, l.beta, l.alpha};
}

/// Epic-mode verification by running the monic-mode verifier on the
/// reversed ladder inside the opposite category.
template <AbelianCategory C>
VerificationReport verify_short_five_dual(const C& cat, const SesLadder<typename C::Morphism>& l) {
  validate_ladder(cat, l);
  const auto op = opposite_instance(cat);
  const auto op_facts = short_five_facts(op, reversed_ladder(l), ShortFiveMode::Monic);
  return short_five_report(dualize(op_facts), ShortFiveMode::Epic, "short_five_dual");
}

/// Executes the pullback argument for the monic case step by step.
template <AbelianCategory C>
VerificationReport short_five_trace(const C& cat, const SesLadder<typename C::Morphism>& l) {
  using M = typename C::Morphism;
  auto facts = short_five_facts(cat, l, ShortFiveMode::Monic);
  const bool beta_monic = facts.beta.value_or(false);
  facts.beta.reset();
  VerificationReport report = short_five_report(facts, ShortFiveMode::Monic, "short_five_trace");
  if (!report.hypotheses_passed()) return report;

  auto step = [&](std::string equation, bool ok, std::string detail = {}) {
    report.trace.push_back({report.trace.size() + 1, std::move(equation), ok, ok ? std::string{} : std::move(detail)});
    return ok;
  };
  auto zero = [&](const M& m) { return is_zero_morphism(cat, m); };
  auto eq = [&](const M& a, const M& b) { return cat.morphism_equal(a, b); };

  const auto ker_beta = cat.kernel(l.beta);
  const M& kappa = ker_beta.inclusion;
  const M g_kappa = cat.compose(l.g, kappa);

  bool ok = step("γ∘g∘κ_β = g′∘β∘κ_β = 0", zero(cat.compose(l.gamma, g_kappa)), "γ∘g∘κ_β is nonzero");
  ok = ok && step("g∘κ_β = 0 since γ is monic", zero(g_kappa), "g∘κ_β is nonzero");

  const auto image = image_factorization(cat, l.f);
  const M cok_f = cat.cokernel(l.f).projection;
  std::optional<M> psi;
  if (ok) {
    const bool annihilated = zero(cat.compose(cok_f, kappa));
    if (annihilated) {
      // factor_through_kernel(cok f, ·) lands in ker(cok f), which is img f.
      try {
        psi = cat.factor_through_kernel(cok_f, kappa);
      } catch (const PreconditionError&) {
        psi.reset();
      }
    }
    ok = step("ψ: K_β → I_f with (img f)∘ψ = κ_β, from (cok f)∘κ_β = 0",
              annihilated && psi && eq(cat.compose(image.image_mono, *psi), kappa),
              annihilated ? "κ_β does not factor through img f" : "(cok f)∘κ_β is nonzero");
  }
  ok = ok && step("φ: A → I_f with (img f)∘φ = f", eq(cat.compose(image.image_mono, image.canonical_epi), l.f),
                  "img f∘φ differs from f");

  std::optional<PullbackData<typename C::Object, M>> pb;
  if (ok) {
    pb = pullback(cat, image.canonical_epi, *psi);
    ok = step("P = pullback of φ and ψ; φ∘π_A = ψ∘π_{K_β}",
              eq(cat.compose(image.canonical_epi, pb->proj_a), cat.compose(*psi, pb->proj_b)),
              "pullback square does not commute");
  }
  if (ok) {
    const M lhs = cat.compose(l.f_prime, cat.compose(l.alpha, pb->proj_a));
    ok = step("f′∘α∘π_A = β∘κ_β∘π_{K_β} = 0, hence π_A = 0", zero(lhs) && zero(pb->proj_a),
              zero(lhs) ? "π_A is nonzero" : "f′∘α∘π_A is nonzero");
  }
  if (ok) {
    const M via_psi = cat.compose(image.image_mono, cat.compose(*psi, pb->proj_b));
    const M via_phi = cat.compose(image.image_mono, cat.compose(image.canonical_epi, pb->proj_a));
    const M direct = cat.compose(kappa, pb->proj_b);
    ok = step("κ_β∘π_{K_β} = (img f)∘ψ∘π_{K_β} = (img f)∘φ∘π_A = 0",
              eq(direct, via_psi) && eq(via_psi, via_phi) && zero(direct), "chain of equalities breaks");
  }
  if (ok) {
    const bool proj_epic = is_epic(cat, pb->proj_b);
    step("π_{K_β} epic as a pullback of the epi φ, hence κ_β = 0 and β monic",
         proj_epic && zero(kappa) && beta_monic,
         !proj_epic ? "π_{K_β} is not epic" : (!zero(kappa) ? "κ_β is nonzero" : "β is not monic"));
  }
  report.conclusions.push_back({"β monic", beta_monic, beta_monic ? "" : "β is not monic"});
  return report;
}

/// Column exactness, commuting squares and two rows as hypotheses; the
/// remaining row's short exactness as the conclusion.
template <AbelianCategory C>
VerificationReport verify_nine_lemma(const C& cat, const NineGrid<typename C::Morphism>& grid, NineDirection dir) {
  validate_grid(cat, grid);
  VerificationReport report;
  report.kind = "nine_lemma";

  auto exactness = [&](const std::string& name, const auto& f, const auto& g, const std::string& fn,
                       const std::string& gn) {
    const auto forms = detail::checked_forms(cat, f, g);
    return Check{name, forms.clause_form, row_diagnostic(forms, fn, gn)};
  };

  const char* cols[3] = {"A", "B", "C"};
  const std::array<const std::array<typename C::Morphism, 2>*, 3> col_maps = {&grid.alpha, &grid.beta, &grid.gamma};
  const char* greek[3] = {"α", "β", "γ"};
  for (std::size_t c = 0; c < 3; ++c) {
    report.hypotheses.push_back(exactness(std::string("column ") + cols[c] + " short exact", (*col_maps[c])[0],
                                          (*col_maps[c])[1], std::string(greek[c]) + "1",
                                          std::string(greek[c]) + "2"));
  }
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string k = std::to_string(i + 1), k1 = std::to_string(i + 2);
    const bool left = detail::commutes(cat, grid.beta[i], grid.f[i], grid.f[i + 1], grid.alpha[i]);
    report.hypotheses.push_back({"square β" + k + "∘f" + k + " = f" + k1 + "∘α" + k, left,
                                 left ? "" : "square between rows " + k + " and " + k1 + " (f side) does not commute"});
    const bool right = detail::commutes(cat, grid.gamma[i], grid.g[i], grid.g[i + 1], grid.beta[i]);
    report.hypotheses.push_back({"square γ" + k + "∘g" + k + " = g" + k1 + "∘β" + k, right,
                                 right ? "" : "square between rows " + k + " and " + k1 + " (g side) does not commute"});
  }

  const std::array<std::size_t, 2> given =
      dir == NineDirection::BottomFromTop ? std::array<std::size_t, 2>{0, 1} : std::array<std::size_t, 2>{1, 2};
  const std::size_t concluded = dir == NineDirection::BottomFromTop ? 2 : 0;
  auto row = [&](std::size_t i) {
    const std::string k = std::to_string(i + 1);
    return exactness("row " + k + " short exact", grid.f[i], grid.g[i], "f" + k, "g" + k);
  };
  for (auto i : given) report.hypotheses.push_back(row(i));
  if (report.hypotheses_passed()) report.conclusions.push_back(row(concluded));
  return report;
}

}  // namespace abelcat
