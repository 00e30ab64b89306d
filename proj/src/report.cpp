#include "superspace/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>

namespace superspace {

ReportRecord make_exact_record(const std::string& suite,
                               const std::string& case_id, bool ok) {
  ReportRecord r;
  r.suite = suite;
  r.case_id = case_id;
  r.status = ok ? "pass" : "fail";
  r.exact = true;
  return r;
}

ReportRecord make_numeric_record(const std::string& suite,
                                 const std::string& case_id, double lhs,
                                 double rhs, double tolerance) {
  ReportRecord r;
  r.suite = suite;
  r.case_id = case_id;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  r.rel_err = scale > 0 ? r.abs_err / scale : r.abs_err;
  r.tolerance = tolerance;
  r.status = (r.rel_err <= tolerance) ? "pass" : "fail";
  return r;
}

void write_report_json(std::vector<ReportRecord> records,
                       const std::string& path, bool with_timings) {
  std::sort(records.begin(), records.end(),
            [](const ReportRecord& a, const ReportRecord& b) {
              return std::tie(a.suite, a.case_id) < std::tie(b.suite, b.case_id);
            });
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j{{"suite", r.suite},     {"case", r.case_id},
                     {"status", r.status},   {"lhs", r.lhs},
                     {"rhs", r.rhs},         {"abs_err", r.abs_err},
                     {"rel_err", r.rel_err}, {"tolerance", r.tolerance},
                     {"exact", r.exact}};
    if (with_timings) j["wall_time"] = r.wall_time;
    arr.push_back(std::move(j));
  }
  std::ofstream out(path);
  out << arr.dump(2) << "\n";
}

bool all_passed(const std::vector<ReportRecord>& records) {
  return std::none_of(records.begin(), records.end(),
                      [](const ReportRecord& r) { return r.status == "fail"; });
}

}  // namespace superspace
