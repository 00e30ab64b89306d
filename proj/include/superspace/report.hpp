#pragma once

#include <string>
#include <vector>

namespace superspace {

struct ReportRecord {
  std::string suite;
  std::string case_id;
  std::string status;  // "pass" | "fail" | "unsupported"
  double lhs = 0.0, rhs = 0.0;
  double abs_err = 0.0, rel_err = 0.0;
  double tolerance = 0.0;
  bool exact = false;  // symbolic cases compare exactly
  double wall_time = 0.0;
};

ReportRecord make_exact_record(const std::string& suite,
                               const std::string& case_id, bool ok);
ReportRecord make_numeric_record(const std::string& suite,
                                 const std::string& case_id, double lhs,
                                 double rhs, double tolerance);

/// JSON array of records, deterministically ordered by (suite, case_id).
/// Wall times are emitted only on request: with them suppressed the
/// report is byte-identical across runs at equal seed and budgets.
void write_report_json(std::vector<ReportRecord> records,
                       const std::string& path, bool with_timings);

/// True iff no record has status "fail" ("unsupported" does not count).
bool all_passed(const std::vector<ReportRecord>& records);

}  // namespace superspace
