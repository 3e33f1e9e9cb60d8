#pragma once

// Verdict records produced by the diagram verifiers. Reports are plain data;
// rendering lives in the CLI.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace abelcat {

struct Check {
  std::string name;
  bool passed = false;
  std::string diagnostic;  // empty when passed
};

struct TraceStep {
  std::size_t index = 0;
  std::string equation;
  bool passed = false;
  std::string detail;
};

enum class ReportStatus { Pass, HypothesisFailed, ConclusionFailed };

std::string_view to_string(ReportStatus s);

struct VerificationReport {
  std::string kind;
  std::vector<Check> hypotheses;
  std::vector<Check> conclusions;
  std::vector<TraceStep> trace;

  bool hypotheses_passed() const;
  ReportStatus status() const;
  bool passed() const { return status() == ReportStatus::Pass; }
  /// Name of the first failing hypothesis, conclusion or trace step.
  std::string culprit() const;
};

enum class ShortFiveMode { Monic, Epic, Iso };
enum class NineDirection { TopFromBottom, BottomFromTop };

std::string_view to_string(ShortFiveMode m);
std::string_view to_string(NineDirection d);
/// Throws InputError on an unknown name.
ShortFiveMode parse_short_five_mode(std::string_view name);
NineDirection parse_nine_direction(std::string_view name);

}  // namespace abelcat
