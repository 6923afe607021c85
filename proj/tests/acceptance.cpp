#include <fstream>
#include <iostream>

#include "vp/suite.hpp"

// Runs every acceptance criterion; one PASS/FAIL line each, report in acceptance_report.json.
int main(int argc, char** argv) {
  vp::SuiteOptions o;
  if (argc > 1) o.only = argv[1];
  o.on_result = [](const vp::CriterionResult& r) { std::cout << vp::format_line(r) << std::endl; };
  const auto rs = vp::run_suite(o);
  std::ofstream("acceptance_report.json") << vp::suite_report(rs).dump(2) << '\n';
  const bool ok = vp::all_passed(rs);
  std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << std::endl;
  return ok ? 0 : 1;
}
