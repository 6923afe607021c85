#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vp/io.hpp"
#include "vp/verify.hpp"

namespace vp {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string group;  // combinatorics | characters | oracle | properties
  CheckResult check;
  double seconds = 0;
};

struct SuiteOptions {
  std::string data_dir = VP_DATA_DIR;
  std::uint64_t seed = 7;
  // Comma-separated groups and/or criterion ids; empty runs everything.
  std::string only;
  std::function<void(const CriterionResult&)> on_result;
};

struct CriterionInfo {
  int id;
  const char* name;
  const char* group;
};
const std::vector<CriterionInfo>& criteria();

// Throws std::invalid_argument for an unknown selector in opts.only.
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);

bool all_passed(const std::vector<CriterionResult>& rs);
json suite_report(const std::vector<CriterionResult>& rs);
std::string format_line(const CriterionResult& r);

}  // namespace vp
