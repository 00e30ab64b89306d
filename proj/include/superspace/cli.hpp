#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superspace/report.hpp"
#include "superspace/superpoly.hpp"

namespace superspace::cli {

struct RunConfig {
  std::vector<Dims> dims;
  std::vector<std::string> suites;
  int sphere_degree = 20;
  double tol_1d = 1e-10;
  std::optional<double> tol_override;
  std::uint64_t seed = 0;
  std::string out;
  bool timings = false;
};

/// Grammar: sum of terms; term = factors joined by '*'; factor is a
/// rational literal `p/q`, `x<k>` or `xf<k>`, optionally `^<int>`.
/// Fermionic factors inside a term must appear in ascending index order.
/// Throws std::runtime_error with the offending position.
SuperPolynomial parse_polynomial(const std::string& text, Dims d);

std::vector<ReportRecord> run_suite(const std::string& suite,
                                    const RunConfig& cfg);
std::vector<ReportRecord> run_suite(const std::string& suite,
                                    const RunConfig& cfg, void* inversions);

int run(int argc, char** argv);

}  // namespace superspace::cli
