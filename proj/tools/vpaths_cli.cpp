#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "vp/characters.hpp"
#include "vp/io.hpp"
#include "vp/paths.hpp"
#include "vp/suite.hpp"
#include "vp/verify.hpp"
#include "vp/verlinde.hpp"

using namespace vp;

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kBadParams = 2, kNotStabilized = 3 };

struct RunConfig {
  int k = 1, l = 0, N = 1, M = 0, i = 0, j = 0;
  int l1 = 0, l2 = 0, l3 = -1;
  int ip = 0, lp = 0;
  int d_cap = -1, aux_cap = kUnbounded, aux_slack = 2;
  int max_mn = 3;
  std::string format = "pretty";
  std::string family = "c";
  std::string module_family = "W";
  std::string matrix, verify, partial, only, data_dir = VP_DATA_DIR;
  bool count = false, check_bijection = false, check_recursion = false, no_cutoff = false, with_grading = false;
  std::uint64_t seed = 7;
  int verbosity = 0;
};

struct BadParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw BadParams(what);
}

void require_kl(const RunConfig& c) {
  require(c.k >= 1, "k must be >= 1");
  require(c.l >= 0 && c.l <= c.k, "l must satisfy 0 <= l <= k");
  require(c.N >= 0 && c.M >= 0, "M and N must be non-negative");
}

void print(const RunConfig& c, const json& j, const std::string& pretty, const std::string& csv) {
  if (c.format == "json") std::cout << j.dump(2) << '\n';
  else if (c.format == "csv") std::cout << csv;
  else std::cout << pretty;
}

int report(const RunConfig& c, const std::string& what, const CheckResult& r) {
  json j{{"check", what}, {"pass", r.ok}, {"stabilized", r.stabilized}, {"cases", r.cases}, {"failures", r.failures}};
  print(c, j, what + ": " + (r.ok ? "PASS " : "FAIL ") + r.summary() + "\n",
        "check,pass,stabilized,cases\n" + what + "," + (r.ok ? "true" : "false") + "," + (r.stabilized ? "true" : "false") +
            "," + std::to_string(r.cases) + "\n");
  if (!r.stabilized) return kNotStabilized;
  return r.ok ? kPass : kCheckFailed;
}

int cmd_verlinde(const RunConfig& c) {
  require(c.k >= 1, "k must be >= 1");
  require(c.N >= 0, "N must be non-negative");
  const auto t = verlinde_numbers(c.k, c.N);
  json vals = json::array();
  std::string pretty = "[", csv = "l,d\n";
  for (std::size_t l = 0; l < t.values.size(); ++l) {
    vals.push_back(json::parse(t.values[l].get_str()));
    pretty += (l ? ", " : "") + t.values[l].get_str();
    csv += std::to_string(l) + "," + t.values[l].get_str() + "\n";
  }
  print(c, {{"k", c.k}, {"N", c.N}, {"values", vals}}, pretty + "]\n", csv);
  return kPass;
}

int cmd_paths(const RunConfig& c) {
  require_kl(c);
  require(c.family == "c" || c.family == "p", "family must be c or p");
  if (c.check_bijection || c.check_recursion) {
    CheckResult r;
    if (c.check_bijection) {
      const auto cs = enumerate_cpaths(c.k, c.l, c.N);
      const auto ps = enumerate_vpaths(c.k, c.l, c.N);
      std::set<CPath> images;
      for (const auto& p : ps) {
        ++r.cases;
        const CPath q = bijection_iota(p);
        if (!validate_cpath(q).ok) r.fail("iota image invalid");
        if (!(bijection_iota_inverse(q) == p)) r.fail("round trip failed");
        if (!(gradings(q) == gradings(p))) r.fail("gradings differ");
        images.insert(q);
      }
      if (images.size() != cs.size() || ps.size() != cs.size()) r.fail("iota is not a bijection");
    }
    if (c.check_recursion) {
      ++r.cases;
      if (c.N >= 1 && !recursion_partition_check(c.k, c.l, c.N - 1)) r.fail("recursion partition failed");
    }
    return report(c, "paths", r);
  }
  const bool cfam = c.family == "c";
  const std::size_t n = cfam ? enumerate_cpaths(c.k, c.l, c.N).size() : enumerate_vpaths(c.k, c.l, c.N).size();
  if (c.count) {
    print(c, {{"k", c.k}, {"l", c.l}, {"N", c.N}, {"family", c.family}, {"count", n}}, std::to_string(n) + "\n",
          "k,l,N,family,count\n" + std::to_string(c.k) + "," + std::to_string(c.l) + "," + std::to_string(c.N) + "," +
              c.family + "," + std::to_string(n) + "\n");
    return kPass;
  }
  json list = json::array();
  std::string lines, csv = "index,e,s1,s2\n";
  auto add = [&](json j, const Grading& g) {
    if (c.with_grading) j["grading"] = {{"e", g.e}, {"s1", g.s1}, {"s2", g.s2}};
    csv += std::to_string(list.size()) + "," + std::to_string(g.e) + "," + std::to_string(g.s1) + "," + std::to_string(g.s2) + "\n";
    lines += j.dump() + "\n";
    list.push_back(std::move(j));
  };
  if (cfam)
    for (const auto& p : enumerate_cpaths(c.k, c.l, c.N)) add(to_json(p), gradings(p));
  else
    for (const auto& p : enumerate_vpaths(c.k, c.l, c.N)) add(to_json(p), gradings(p));
  print(c, list, lines, csv);
  return kPass;
}

int cmd_char(const RunConfig& c) {
  require(c.k >= 1, "k must be >= 1");
  require(c.N >= 0, "N must be non-negative");
  if (!c.matrix.empty()) {
    require(c.matrix == "R" || c.matrix == "L" || c.matrix == "Lrec", "matrix must be R, L or Lrec");
    const TransferMatrix m = c.matrix == "R" ? r_matrix(c.k, c.N) : c.matrix == "L" ? l_matrix(c.k) : l_matrix_recursive(c.k);
    std::string pretty, csv = "row,col,entry\n";
    for (std::size_t r = 0; r < m.entries.size(); ++r) {
      for (std::size_t s = 0; s < m.entries[r].size(); ++s) {
        const std::string e = m.entries[r][s].to_string();
        pretty += (s ? "  |  " : "") + e;
        csv += std::to_string(r) + "," + std::to_string(s) + ",\"" + e + "\"\n";
      }
      pretty += "\n";
    }
    print(c, to_json(m), pretty, csv);
    return kPass;
  }
  if (!c.verify.empty()) {
    require(c.verify == "all" || c.verify == "right" || c.verify == "left" || c.verify == "conj",
            "verify must be all, right, left or conj");
    CheckResult r;
    for (int l = 0; l <= c.k; ++l) {
      if ((c.verify == "all" || c.verify == "right") && c.N >= 2) {
        ++r.cases;
        if (!verify_right_recursion(c.k, l, c.N)) r.fail("right recursion l=" + std::to_string(l));
      }
      if ((c.verify == "all" || c.verify == "left") && c.N >= 1) {
        ++r.cases;
        if (!verify_left_recursion(c.k, l, c.N)) r.fail("left recursion l=" + std::to_string(l));
      }
    }
    if ((c.verify == "all" || c.verify == "conj") && c.N >= 2) {
      ++r.cases;
      if (!verify_conjugation_identity(c.k, c.N)) r.fail("conjugation identity");
    }
    return report(c, "char", r);
  }
  require_kl(c);
  LaurentPoly3 p;
  if (c.partial.empty()) p = char_full(c.k, c.l, c.N);
  else if (c.partial == "left") p = partial_char_left(c.k, c.l, c.N, c.i);
  else if (c.partial == "right") p = partial_char_right(c.k, c.l, c.N, c.i, c.j);
  else if (c.partial == "both") p = partial_char_both(c.k, c.N, c.i, c.l, c.ip, c.lp);
  else throw BadParams("partial must be left, right or both");
  print(c, {{"k", c.k}, {"l", c.l}, {"N", c.N}, {"character", to_json(p)}}, p.to_string() + "\n",
        "q,z1,z2,c\n" + [&] {
          std::string s;
          for (const auto& [e, co] : p.terms())
            s += std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "," + co.get_str() + "\n";
          return s;
        }());
  return kPass;
}

ModuleSpec module_from(const RunConfig& c) {
  require(c.k >= 1, "k must be >= 1");
  require(c.l1 >= 0 && c.l2 >= 0, "l1 and l2 must be non-negative");
  const Family f = family_from_name(c.module_family);
  const bool barred = c.module_family.size() > 1;
  ModuleSpec s{f, barred, c.k, c.l1, c.l2, 0, {}};
  if (barred) return s;
  if (c.l3 >= 0) s.l3 = c.l3;
  else s.l3 = f == Family::W ? c.l1 + c.l2 - c.k : 0;
  return s;
}

int cmd_oracle_dims(const RunConfig& c) {
  const ModuleSpec spec = module_from(c);
  CoinvariantSpec cs{spec, c.M, c.N, c.d_cap, c.aux_cap, !c.no_cutoff};
  auto t = coinvariant_dims(cs);
  bool stable = t.stabilized;
  if (c.aux_cap != kUnbounded) {
    // A finite cap must also agree with a cap raised by aux_slack.
    CoinvariantSpec wider = cs;
    wider.aux_cap = c.aux_cap + c.aux_slack;
    const auto t2 = coinvariant_dims(wider);
    if (t2.total_dim != t.total_dim || !(t2.character() == t.character())) stable = false;
  }
  t.stabilized = stable;
  std::string pretty = spec.name() + "^(" + std::to_string(c.M) + "," + std::to_string(c.N) + "): dim " +
                       std::to_string(t.total_dim) + (stable ? "" : " (not stabilized)") + "\n";
  for (const auto& e : t.entries) {
    pretty += "  (" + std::to_string(e.w.m) + "," + std::to_string(e.w.n) + "," + std::to_string(e.w.d) + ") dim " +
              std::to_string(e.dim) + " {";
    for (std::size_t b = 0; b < e.basis.size(); ++b) pretty += (b ? ", " : "") + to_string(e.basis[b]);
    pretty += "}\n";
  }
  print(c, to_json(t), pretty, dims_csv_header() + dims_csv_rows(t));
  return stable ? kPass : kNotStabilized;
}

int cmd_oracle_aux(const RunConfig& c) {
  require(c.k >= 1, "k must be >= 1");
  require(c.max_mn >= 0, "maxMN must be non-negative");
  CheckResult r;
  for (int l = 0; l <= c.k; ++l)
    for (int i = 0; i <= l; ++i)
      for (int M = 0; M <= c.max_mn; ++M)
        for (int N = 0; M + N <= c.max_mn; ++N) r.merge(verify_aux(c.k, l, i, M, N, c.aux_cap));
  return report(c, "verify-aux", r);
}

int cmd_oracle_thmr(const RunConfig& c) {
  require(c.k >= 1 && c.l1 >= 0 && c.l2 >= 0, "bad module labels");
  require(c.N >= 1, "N must be >= 1");
  const int l3 = c.l3 >= 0 ? c.l3 : std::min(c.l1, c.l2);
  return report(c, "verify-thmR", verify_w3_recursion(c.k, c.l1, c.l2, l3, c.M, c.N));
}

int cmd_suite(const RunConfig& c) {
  SuiteOptions o;
  o.data_dir = c.data_dir;
  o.seed = c.seed;
  o.only = c.only;
  if (c.format == "pretty") o.on_result = [](const CriterionResult& r) { std::cout << format_line(r) << std::endl; };
  const auto rs = run_suite(o);
  if (c.format == "json") std::cout << suite_report(rs).dump(2) << '\n';
  else if (c.format == "csv") {
    std::cout << "id,name,group,pass,cases,seconds\n";
    for (const auto& r : rs)
      std::cout << r.id << ',' << r.name << ',' << r.group << ',' << (r.check.ok ? "true" : "false") << ',' << r.check.cases
                << ',' << r.seconds << '\n';
  } else std::cout << (all_passed(rs) ? "all criteria passed" : "some criteria FAILED") << '\n';
  return all_passed(rs) ? kPass : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Verlinde paths, characters and Heisenberg coinvariant oracle"};
  app.require_subcommand(1);
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--seed", c.seed, "Random seed");
  app.add_flag("-v,--verbose", c.verbosity, "Verbosity (repeatable)");

  auto kl = [&](CLI::App* s) {
    s->add_option("--k", c.k, "Level");
    s->add_option("--l", c.l, "Weight label");
    s->add_option("--N", c.N, "Length");
  };

  auto* verl = app.add_subcommand("verlinde", "Table of Verlinde numbers d^(N)_{k,l}");
  kl(verl);

  auto* paths = app.add_subcommand("paths", "Enumerate or check combinatorial (c) and Verlinde (p) paths");
  kl(paths);
  paths->add_option("--family", c.family, "c or p");
  paths->add_flag("--count", c.count, "Print the count only");
  paths->add_flag("--grading", c.with_grading, "Attach (e, s1, s2) to each path");
  paths->add_flag("--check-bijection", c.check_bijection, "Round-trip every path through the bijection");
  paths->add_flag("--check-recursion", c.check_recursion, "Check the concatenation recursion at length N");

  auto* chr = app.add_subcommand("char", "Characters, transfer matrices and recursion checks");
  kl(chr);
  chr->add_option("--partial", c.partial, "left | right | both");
  chr->add_option("--i", c.i, "Left/right end index");
  chr->add_option("--j", c.j, "Right spin index");
  chr->add_option("--ip", c.ip, "Right end index (both)");
  chr->add_option("--lp", c.lp, "Right end weight (both)");
  chr->add_option("--matrix", c.matrix, "R | L | Lrec");
  chr->add_option("--verify", c.verify, "all | right | left | conj");

  auto* orc = app.add_subcommand("oracle", "Heisenberg coinvariant oracle");
  orc->require_subcommand(1);
  auto caps = [&](CLI::App* s) {
    s->add_option("--d-cap", c.d_cap, "Degree cap (-1: from the weight window)")->envname("VPATHS_D_CAP");
    s->add_option("--aux-cap", c.aux_cap, "Relation-generation degree cap (-1: unbounded)")->envname("VPATHS_AUX_CAP");
    s->add_option("--aux-slack", c.aux_slack, "Cap increase used for the stabilization comparison")
        ->envname("VPATHS_AUX_SLACK");
  };
  auto* dims = orc->add_subcommand("dims", "Graded dimensions and monomial bases");
  dims->add_option("--family", c.module_family, "W V U Wbar Vbar Ubar");
  dims->add_option("--k", c.k, "Level");
  dims->add_option("--l1", c.l1, "");
  dims->add_option("--l2", c.l2, "");
  dims->add_option("--l3", c.l3, "Default: W2 convention l1+l2-k for W, 0 for V and U");
  dims->add_option("--M", c.M, "");
  dims->add_option("--N", c.N, "");
  dims->add_flag("--no-cutoff", c.no_cutoff, "Disable the M=0 / N=0 cutoff");
  caps(dims);
  auto* aux = orc->add_subcommand("verify-aux", "Coinvariant dimensions against path counts");
  aux->add_option("--k", c.k, "Level");
  aux->add_option("--maxMN", c.max_mn, "Largest M+N");
  caps(aux);
  auto* thr = orc->add_subcommand("verify-thmR", "Graded recursion of W_k[l1,l2,l3]^(M,N)");
  thr->add_option("--k", c.k, "Level");
  thr->add_option("--l1", c.l1, "");
  thr->add_option("--l2", c.l2, "");
  thr->add_option("--l3", c.l3, "Default: min(l1, l2)");
  thr->add_option("--M", c.M, "");
  thr->add_option("--N", c.N, "");

  auto* suite = app.add_subcommand("suite", "Run the acceptance battery");
  suite->add_option("--only", c.only, "Comma-separated groups or criterion ids");
  suite->add_option("--data-dir", c.data_dir, "Directory holding golden/");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadParams;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int code = kPass;
  try {
    if (*verl) code = cmd_verlinde(c);
    else if (*paths) code = cmd_paths(c);
    else if (*chr) code = cmd_char(c);
    else if (*dims) code = cmd_oracle_dims(c);
    else if (*aux) code = cmd_oracle_aux(c);
    else if (*thr) code = cmd_oracle_thmr(c);
    else if (*suite) code = cmd_suite(c);
  } catch (const BadParams& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadParams;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadParams;
  } catch (const NotStabilized& e) {
    std::cerr << "not stabilized: " << e.what() << '\n';
    return kNotStabilized;
  }
  if (c.verbosity > 0)
    std::cerr << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "s\n";
  return code;
}
