#include "abelcat/cli/render.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "abelcat/cli/pretty_json.hpp"

namespace abelcat::cli {

using nlohmann::ordered_json;

namespace {

std::string_view verdict(const ReportDocument& doc) {
  if (doc.error) return "input_error";
  return doc.passed() ? "pass" : "fail";
}

ordered_json checks_json(const std::vector<Check>& checks) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    if (!c.diagnostic.empty()) j["diagnostic"] = c.diagnostic;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string call_signature(const AssertionOutcome& a) {
  std::string s(to_string(a.kind));
  if (a.mode) s += "[" + std::string(to_string(*a.mode)) + "]";
  if (a.direction) s += "[" + std::string(to_string(*a.direction)) + "]";
  s += "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) s += (i ? ", " : "") + a.args[i];
  return s + ")";
}

std::string status_word(const VerificationReport& r) {
  switch (r.status()) {
    case ReportStatus::Pass:
      return "PASS";
    case ReportStatus::HypothesisFailed:
      return "HYPOTHESIS FAILED";
    case ReportStatus::ConclusionFailed:
      return "FAIL";
  }
  return "?";
}

}  // namespace

std::string render_structured(const ReportDocument& doc) {
  ordered_json j;
  j["tool"] = "abelcat";
  j["version"] = doc.version;
  j["input_digest"] = "sha256:" + doc.input_digest;
  if (doc.category) j["category"] = std::string(to_string(*doc.category));
  j["verdict"] = std::string(verdict(doc));
  j["exit_code"] = doc.exit_code();
  if (doc.error) {
    ordered_json e;
    e["message"] = doc.error->message;
    if (doc.error->pos) {
      e["line"] = doc.error->pos->line;
      e["column"] = doc.error->pos->column;
    }
    j["error"] = std::move(e);
  } else {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < doc.assertions.size(); ++i) {
      const auto& a = doc.assertions[i];
      ordered_json aj;
      aj["index"] = i + 1;
      aj["kind"] = std::string(to_string(a.kind));
      aj["args"] = a.args;
      if (a.mode) aj["mode"] = std::string(to_string(*a.mode));
      if (a.direction) aj["direction"] = std::string(to_string(*a.direction));
      aj["status"] = std::string(to_string(a.report.status()));
      aj["hypotheses"] = checks_json(a.report.hypotheses);
      aj["conclusions"] = checks_json(a.report.conclusions);
      if (!a.report.trace.empty()) {
        ordered_json steps = ordered_json::array();
        for (const auto& t : a.report.trace) {
          ordered_json s;
          s["step"] = t.index;
          s["equation"] = t.equation;
          s["passed"] = t.passed;
          if (!t.detail.empty()) s["detail"] = t.detail;
          steps.push_back(std::move(s));
        }
        aj["trace"] = std::move(steps);
      }
      arr.push_back(std::move(aj));
    }
    j["assertions"] = std::move(arr);
  }
  return pretty_json(j);
}

std::string render_text(const ReportDocument& doc) {
  std::ostringstream os;
  os << "abelcat " << doc.version << "  input sha256:" << doc.input_digest << "\n";
  if (doc.category) os << "category: " << to_string(*doc.category) << "\n";
  if (doc.error) {
    os << "input error";
    if (doc.error->pos) os << " at line " << doc.error->pos->line << ", column " << doc.error->pos->column;
    os << ": " << doc.error->message << "\n";
  }
  for (std::size_t i = 0; i < doc.assertions.size(); ++i) {
    const auto& a = doc.assertions[i];
    os << "#" << i + 1 << " " << call_signature(a) << ": " << status_word(a.report) << "\n";
    auto line = [&](const char* role, const Check& c) {
      os << "    " << role << " " << c.name << ": " << (c.passed ? "ok" : "FAILED");
      if (!c.diagnostic.empty()) os << " (" << c.diagnostic << ")";
      os << "\n";
    };
    for (const auto& h : a.report.hypotheses) line("hypothesis", h);
    for (const auto& c : a.report.conclusions) line("conclusion", c);
    for (const auto& t : a.report.trace) {
      os << "    step " << t.index << " " << t.equation << ": " << (t.passed ? "ok" : "FAILED");
      if (!t.detail.empty()) os << " (" << t.detail << ")";
      os << "\n";
    }
  }
  os << "verdict: " << verdict(doc) << " (exit " << doc.exit_code() << ")\n";
  return os.str();
}

std::string render(const ReportDocument& doc, OutputFormat format) {
  return format == OutputFormat::Structured ? render_structured(doc) : render_text(doc);
}

}  // namespace abelcat::cli
