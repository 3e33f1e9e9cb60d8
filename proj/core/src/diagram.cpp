#include "abelcat/diagram.hpp"

#include <string>
#include <utility>

namespace abelcat {

namespace {

ExactnessForms reverse_row(const ExactnessForms& op) {
  // In C^op the row's first map is the original second map, so "monic" and
  // "epic" trade places; the remaining clauses read the same.
  ExactnessForms forms = op;
  forms.f_monic = op.g_epic;
  forms.g_epic = op.f_monic;
  return forms;
}

std::string prime(std::string_view name) { return std::string(name) + "′"; }

}  // namespace

ShortFiveFacts dualize(const ShortFiveFacts& op) {
  ShortFiveFacts facts;
  facts.top = reverse_row(op.bottom);
  facts.bottom = reverse_row(op.top);
  facts.left_square = op.right_square;
  facts.right_square = op.left_square;
  facts.alpha = op.gamma;
  facts.gamma = op.alpha;
  facts.beta = op.beta;
  facts.beta_inverse = op.beta_inverse;
  return facts;
}

std::string row_diagnostic(const ExactnessForms& forms, std::string_view f, std::string_view g) {
  const std::string fs(f), gs(g);
  if (!forms.f_monic) return fs + " not monic";
  if (!forms.g_epic) return gs + " not epic";
  if (!forms.composite_zero) return gs + "∘" + fs + " ≠ 0";
  if (!forms.cok_ker_zero) return "(cok " + fs + ")∘(ker " + gs + ") ≠ 0";
  return {};
}

VerificationReport short_five_report(const ShortFiveFacts& facts, ShortFiveMode mode, std::string kind) {
  VerificationReport report;
  report.kind = std::move(kind);
  const std::string word(to_string(mode));

  report.hypotheses.push_back({"top row short exact", facts.top.clause_form, row_diagnostic(facts.top, "f", "g")});
  report.hypotheses.push_back({"bottom row short exact", facts.bottom.clause_form,
                               row_diagnostic(facts.bottom, prime("f"), prime("g"))});
  report.hypotheses.push_back(
      {"left square commutes", facts.left_square, facts.left_square ? "" : "f′∘α ≠ β∘f"});
  report.hypotheses.push_back(
      {"right square commutes", facts.right_square, facts.right_square ? "" : "g′∘β ≠ γ∘g"});
  report.hypotheses.push_back({"α " + word, facts.alpha, facts.alpha ? "" : "α is not " + word});
  report.hypotheses.push_back({"γ " + word, facts.gamma, facts.gamma ? "" : "γ is not " + word});

  if (facts.beta) {
    report.conclusions.push_back({"β " + word, *facts.beta, *facts.beta ? "" : "β is not " + word});
  }
  if (facts.beta_inverse) {
    report.conclusions.push_back({"β⁻¹ two-sided", *facts.beta_inverse,
                                  *facts.beta_inverse ? "" : "constructed inverse fails β∘β⁻¹ = id = β⁻¹∘β"});
  }
  return report;
}

}  // namespace abelcat
