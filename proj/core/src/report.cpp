#include "abelcat/report.hpp"

#include <string>

#include "abelcat/errors.hpp"

namespace abelcat {

std::string_view to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::Pass:
      return "pass";
    case ReportStatus::HypothesisFailed:
      return "hypothesis_failed";
    case ReportStatus::ConclusionFailed:
      return "conclusion_failed";
  }
  return "unknown";
}

bool VerificationReport::hypotheses_passed() const {
  for (const auto& h : hypotheses)
    if (!h.passed) return false;
  return true;
}

ReportStatus VerificationReport::status() const {
  if (!hypotheses_passed()) return ReportStatus::HypothesisFailed;
  for (const auto& c : conclusions)
    if (!c.passed) return ReportStatus::ConclusionFailed;
  for (const auto& t : trace)
    if (!t.passed) return ReportStatus::ConclusionFailed;
  return ReportStatus::Pass;
}

std::string VerificationReport::culprit() const {
  for (const auto& h : hypotheses)
    if (!h.passed) return h.name;
  for (const auto& c : conclusions)
    if (!c.passed) return c.name;
  for (const auto& t : trace)
    if (!t.passed) return "step " + std::to_string(t.index);
  return {};
}

std::string_view to_string(ShortFiveMode m) {
  switch (m) {
    case ShortFiveMode::Monic:
      return "monic";
    case ShortFiveMode::Epic:
      return "epic";
    case ShortFiveMode::Iso:
      return "iso";
  }
  return "unknown";
}

std::string_view to_string(NineDirection d) {
  return d == NineDirection::TopFromBottom ? "top_from_bottom" : "bottom_from_top";
}

ShortFiveMode parse_short_five_mode(std::string_view name) {
  if (name == "monic") return ShortFiveMode::Monic;
  if (name == "epic") return ShortFiveMode::Epic;
  if (name == "iso") return ShortFiveMode::Iso;
  throw InputError("unknown short-five mode '" + std::string(name) + "' (expected monic, epic or iso)");
}

NineDirection parse_nine_direction(std::string_view name) {
  if (name == "top_from_bottom") return NineDirection::TopFromBottom;
  if (name == "bottom_from_top") return NineDirection::BottomFromTop;
  throw InputError("unknown nine-lemma direction '" + std::string(name) +
                   "' (expected top_from_bottom or bottom_from_top)");
}

}  // namespace abelcat
