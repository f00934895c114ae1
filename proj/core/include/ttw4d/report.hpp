#pragma once

#include <string>
#include <vector>

#include "ttw4d/suites.hpp"

namespace ttw4d {

enum class ReportFormat { json, csv };
ReportFormat parse_format(const std::string& text);

std::string emit_report(const SuiteReport& report, ReportFormat format);
std::string emit_reports(const std::vector<SuiteReport>& reports, ReportFormat format);

// Inverse of emit_report for a single JSON report.
SuiteReport parse_report_json(const std::string& text);
// Case records from CSV produced by emit_report (header row required).
std::vector<CaseRecord> parse_report_csv(const std::string& text);

void write_file(const std::string& path, const std::string& bytes);

}  // namespace ttw4d
