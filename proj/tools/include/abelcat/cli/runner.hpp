#pragma once

// Executes the assertions of a parsed diagram file and collects the results
// into a report document.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abelcat/cli/diagram_file.hpp"
#include "abelcat/report.hpp"

namespace abelcat::cli {

struct AssertionOutcome {
  AssertionKind kind = AssertionKind::Commutes;
  std::vector<std::string> args;
  std::optional<ShortFiveMode> mode;
  std::optional<NineDirection> direction;
  VerificationReport report;
};

struct InputErrorInfo {
  std::string message;
  std::optional<SourcePos> pos;
};

struct ReportDocument {
  std::string version;
  std::string input_digest;  // hex SHA-256 of the input bytes
  std::optional<CategoryTag> category;
  std::vector<AssertionOutcome> assertions;
  std::optional<InputErrorInfo> error;

  bool passed() const;
  /// 0 when every assertion passes, 1 when one fails, 2 on an input error.
  int exit_code() const;
};

std::string sha256_hex(std::string_view bytes);
std::string_view tool_version();
std::string_view to_string(CategoryTag c);

/// Category-level validation (homomorphism congruences, composability),
/// then every assertion in order. Throws LocatedError on input errors.
std::vector<AssertionOutcome> run_file(const DiagramFile& df, unsigned jobs = 1);

/// Runs only `assertion` against the declarations of `df`.
AssertionOutcome run_assertion(const DiagramFile& df, const AssertionDecl& assertion);

/// Parse and run, folding input errors into the document.
ReportDocument check_text(std::string_view text, unsigned jobs = 1);

}  // namespace abelcat::cli
