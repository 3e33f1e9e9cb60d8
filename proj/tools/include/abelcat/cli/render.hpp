#pragma once

#include <string>

#include "abelcat/cli/runner.hpp"

namespace abelcat::cli {

enum class OutputFormat { Text, Structured };

/// Canonical JSON: fixed key order, two-space indent, trailing newline.
std::string render_structured(const ReportDocument& doc);
std::string render_text(const ReportDocument& doc);
std::string render(const ReportDocument& doc, OutputFormat format);

}  // namespace abelcat::cli
