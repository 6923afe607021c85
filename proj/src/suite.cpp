#include "vp/suite.hpp"

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vp {

namespace {

CheckResult run_criterion(int id, const SuiteOptions& o) {
  switch (id) {
    case 1: return check_cardinality(3, 6);
    case 2: return check_k1_sanity(10);
    case 3: return check_bijection(3, 6);
    case 4: return check_recursion_partitions(3, 5);
    case 5: return check_level1_decomposition(3, 4);
    case 6: return check_golden_matrices(o.data_dir);
    case 7: return check_character_recursions(3, 2, 5);
    case 8: return check_rank_degeneration(3, o.seed);
    case 9: return check_grading_inversion(2, 5);
    case 10: return check_monomial_table(o.data_dir);
    case 11: {
      CheckResult r;
      for (int k = 1; k <= 2; ++k)
        for (int l = 0; l <= k; ++l)
          for (int i = 0; i <= l; ++i)
            for (int M = 0; M <= 4; ++M)
              for (int N = 0; M + N <= 4; ++N) r.merge(verify_aux(k, l, i, M, N));
      r.merge(check_fh_basis(2, 3));
      return r;
    }
    case 12: {
      CheckResult r;
      for (int k = 1; k <= 2; ++k)
        for (int l1 = 0; l1 <= k; ++l1)
          for (int l2 = 0; l2 <= k; ++l2)
            for (int l3 = 0; l3 <= std::min(l1, l2); ++l3)
              for (int M = 0; M <= 3; ++M)
                for (int N = 1; M + N <= 3; ++N) r.merge(verify_w3_recursion(k, l1, l2, l3, M, N));
      return r;
    }
    case 13: return check_character_bridge(2, 3, 3);
    case 14: return check_exact_sequences(2, 3);
    case 15: return check_coproduct(2, 4);
    case 16: return check_vanishing(3, 3);
    case 17: {
      CheckResult r = check_confluence(1000, o.seed);
      r.merge(check_aux_monotonicity(2));
      r.merge(check_module_symmetries(2, 4));
      return r;
    }
  }
  throw std::invalid_argument("unknown criterion " + std::to_string(id));
}

std::set<int> select(const std::string& only) {
  std::set<int> ids;
  if (only.empty()) {
    for (const auto& c : criteria()) ids.insert(c.id);
    return ids;
  }
  std::stringstream ss(only);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    bool hit = false;
    for (const auto& c : criteria())
      if (tok == c.group || tok == std::to_string(c.id)) {
        ids.insert(c.id);
        hit = true;
      }
    if (!hit) throw std::invalid_argument("unknown selector: " + tok);
  }
  return ids;
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> list{
      {1, "cardinality", "combinatorics"},
      {2, "k1_sanity", "combinatorics"},
      {3, "bijection", "combinatorics"},
      {4, "recursion_partitions", "combinatorics"},
      {5, "level1_decomposition", "combinatorics"},
      {6, "transfer_matrices_golden", "characters"},
      {7, "character_recursions", "characters"},
      {8, "rank_degeneration", "characters"},
      {9, "grading_inversion", "combinatorics"},
      {10, "monomial_table_golden", "oracle"},
      {11, "aux_dimensions", "oracle"},
      {12, "w3_graded_recursion", "oracle"},
      {13, "character_bridge", "oracle"},
      {14, "exact_sequences", "oracle"},
      {15, "coproduct_injectivity", "oracle"},
      {16, "vanishing_relations", "oracle"},
      {17, "properties", "properties"},
  };
  return list;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opts) {
  const auto ids = select(opts.only);
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!ids.count(c.id)) continue;
    CriterionResult r{c.id, c.name, c.group, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.check = run_criterion(c.id, opts);
    } catch (const std::exception& e) {
      r.check.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (opts.on_result) opts.on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

bool all_passed(const std::vector<CriterionResult>& rs) {
  for (const auto& r : rs)
    if (!r.check.ok) return false;
  return true;
}

json suite_report(const std::vector<CriterionResult>& rs) {
  json items = json::array();
  for (const auto& r : rs)
    items.push_back({{"id", r.id},
                     {"name", r.name},
                     {"group", r.group},
                     {"pass", r.check.ok},
                     {"stabilized", r.check.stabilized},
                     {"cases", r.check.cases},
                     {"seconds", r.seconds},
                     {"failures", r.check.failures}});
  return {{"pass", all_passed(rs)}, {"criteria", items}};
}

std::string format_line(const CriterionResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "[%s] %2d %-26s %8ld cases %9.2fs", r.check.ok ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.check.cases, r.seconds);
  std::string s = buf;
  for (const auto& f : r.check.failures) s += "\n       " + f;
  return s;
}

}  // namespace vp
