#include "vp/verify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <set>
#include <sstream>

#include "vp/characters.hpp"
#include "vp/io.hpp"
#include "vp/verlinde.hpp"

namespace vp {

namespace {

constexpr std::size_t kMaxRecorded = 8;

std::string str(const ModuleSpec& s, int M, int N) {
  return s.name() + "^(" + std::to_string(M) + "," + std::to_string(N) + ")";
}

// Stabilized coinvariant character; records non-stabilization in r.
LaurentPoly3 coinv_char(const ModuleSpec& s, int M, int N, CheckResult& r, int* total = nullptr) {
  auto t = coinvariant_dims(CoinvariantSpec{s, M, N});
  if (!t.stabilized) r.unstable(str(s, M, N));
  if (total) *total = t.total_dim;
  return t.character();
}

}  // namespace

void CheckResult::fail(const std::string& what) {
  ok = false;
  if (failures.size() < kMaxRecorded) failures.push_back(what);
}

void CheckResult::unstable(const std::string& what) {
  stabilized = false;
  fail("not stabilized: " + what);
}

void CheckResult::merge(const CheckResult& o) {
  ok = ok && o.ok;
  stabilized = stabilized && o.stabilized;
  cases += o.cases;
  for (const auto& f : o.failures)
    if (failures.size() < kMaxRecorded) failures.push_back(f);
}

std::string CheckResult::summary() const {
  std::ostringstream os;
  os << cases << " cases";
  if (!stabilized) os << ", not stabilized";
  if (!failures.empty()) os << "; first failure: " << failures.front();
  return os.str();
}

// ---------------------------------------------------------------- combinatorics

CheckResult check_cardinality(int kmax, int Nmax) {
  CheckResult r;
  for (int k = 1; k <= kmax; ++k)
    for (int N = 1; N <= Nmax; ++N) {
      auto d = verlinde_numbers(k, N);
      for (int l = 0; l <= k; ++l) {
        ++r.cases;
        auto nc = enumerate_cpaths(k, l, N).size(), np = enumerate_vpaths(k, l, N).size();
        if (nc != np || mpz_class(static_cast<unsigned long>(nc)) != d.values[l])
          r.fail("k=" + std::to_string(k) + " l=" + std::to_string(l) + " N=" + std::to_string(N) + ": #C=" +
                 std::to_string(nc) + " #P=" + std::to_string(np) + " d=" + d.values[l].get_str());
      }
    }
  return r;
}

CheckResult check_k1_sanity(int Nmax) {
  CheckResult r;
  for (int N = 1; N <= Nmax; ++N) {
    auto d = verlinde_numbers(1, N);
    mpz_class expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), 2, N - 1);
    for (int l = 0; l <= 1; ++l) {
      ++r.cases;
      if (d.values[l] != expect) r.fail("N=" + std::to_string(N) + " l=" + std::to_string(l));
    }
  }
  return r;
}

CheckResult check_bijection(int kmax, int Nmax) {
  CheckResult r;
  for (int k = 1; k <= kmax; ++k)
    for (int l = 0; l <= k; ++l)
      for (int N = 1; N <= Nmax; ++N) {
        const std::string tag = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " N=" + std::to_string(N);
        auto cs = enumerate_cpaths(k, l, N);
        std::set<CPath> images;
        for (const auto& p : enumerate_vpaths(k, l, N)) {
          ++r.cases;
          CPath c = bijection_iota(p);
          if (!validate_cpath(c).ok) r.fail(tag + ": image is not a valid path");
          if (!(bijection_iota_inverse(c) == p)) r.fail(tag + ": round trip failed");
          images.insert(c);
        }
        // Injective and onto.
        if (images != std::set<CPath>(cs.begin(), cs.end())) r.fail(tag + ": image set differs from C");
        for (const auto& c : cs)
          if (!(bijection_iota(bijection_iota_inverse(c)) == c)) r.fail(tag + ": inverse round trip failed");
      }
  return r;
}

CheckResult check_recursion_partitions(int kmax, int Nmax) {
  CheckResult r;
  for (int k = 1; k <= kmax; ++k)
    for (int l = 0; l <= k; ++l)
      for (int N = 0; N < Nmax; ++N) {
        ++r.cases;
        if (!recursion_partition_check(k, l, N))
          r.fail("k=" + std::to_string(k) + " l=" + std::to_string(l) + " N+1=" + std::to_string(N + 1));
      }
  return r;
}

CheckResult check_level1_decomposition(int kmax, int Nmax) {
  CheckResult r;
  for (int k = 1; k <= kmax; ++k)
    for (int N = 0; N <= Nmax; ++N)
      for (int lp = 0; lp <= k; ++lp)
        for (const auto& p : enumerate_cpaths(k, lp, N))
          for (int l = 0; l <= k; ++l)
            for (int lpp = 0; lpp <= k; ++lpp) {
              if (!is_admissible(l, lpp, lp, k)) continue;
              ++r.cases;
              const std::string tag = "k=" + std::to_string(k) + " N=" + std::to_string(N) + " triple=(" +
                                      std::to_string(l) + "," + std::to_string(lpp) + "," + std::to_string(lp) + ")";
              auto d = level1_decompose(p, l, lpp, lp);
              if (static_cast<int>(d.paths.size()) != k || d.triples.size() != d.paths.size()) {
                r.fail(tag + ": wrong number of summands");
                continue;
              }
              CPath target = cpath_concat(l, lpp, lp, p);
              CPath sum{k, 0, N + 1, std::vector<int>(N + 1, 0), std::vector<int>(N, 0)};
              int sl = 0, slpp = 0, slp = 0;
              bool good = true;
              for (int j = 0; j < k; ++j) {
                const auto& q = d.paths[j];
                const auto& t = d.triples[j];
                if (q.k != 1 || !validate_cpath(q).ok || q.l != t.lp || !is_admissible(t.l, t.lpp, t.lp, 1)) good = false;
                sl += t.l;
                slpp += t.lpp;
                slp += t.lp;
                CPath img = cpath_concat(t.l, t.lpp, t.lp, q);
                for (int i = 0; i <= N; ++i) sum.a[i] += img.a[i];
                for (int i = 0; i < N; ++i) sum.b[i] += img.b[i];
              }
              sum.l = sl;
              if (!good) r.fail(tag + ": invalid level-1 summand");
              if (sl != l || slpp != lpp || slp != lp) r.fail(tag + ": triples do not add up");
              if (!(sum == target)) r.fail(tag + ": reconstruction differs");
            }
  return r;
}

CheckResult check_grading_inversion(int kmax, int Nmax) {
  CheckResult r;
  for (int k = 1; k <= kmax; ++k)
    for (int l = 0; l <= k; ++l)
      for (int N = 2; N <= Nmax; ++N)
        for (const auto& p : enumerate_vpaths(k, l, N)) {
          ++r.cases;
          VPath q = reverse_vpath(p);
          const int i2 = p.alpha_at(1) + p.beta_at(1) - p.alpha_at(2);
          const int ip2 = p.alpha_at(N) + p.beta_at(N - 1) - p.alpha_at(N - 1);
          const long i = i2 / 2, ip = ip2 / 2, lp = p.alpha_at(N);
          Grading g = gradings(p), h = gradings(q);
          bool good = validate_vpath(q).ok && reverse_vpath(q) == p && h.e + g.e == (N - 1) * (g.s2 + l - i) &&
                      h.s1 + lp - ip == g.s1 + l - i && h.s2 + lp - ip == g.s2 + l - i;
          if (!good) r.fail("k=" + std::to_string(k) + " l=" + std::to_string(l) + " N=" + std::to_string(N));
        }
  return r;
}

// ---------------------------------------------------------------- characters

CheckResult check_golden_matrices(const std::string& data_dir) {
  CheckResult r;
  try {
    auto gr = load_golden_matrix(data_dir + "/golden/R1.json");
    for (int N = 2; N <= 8; ++N) {
      ++r.cases;
      std::string why;
      if (!golden_matches(gr, r_matrix(1, N), N, &why)) r.fail("R_1 at N=" + std::to_string(N) + ": " + why);
    }
    auto gl = load_golden_matrix(data_dir + "/golden/L1.json");
    ++r.cases;
    std::string why;
    if (!golden_matches(gl, l_matrix(1), 0, &why)) r.fail("L_1: " + why);
  } catch (const std::exception& e) {
    r.fail(std::string("golden matrix: ") + e.what());
  }
  return r;
}

CheckResult check_character_recursions(int kmax_rl, int kmax_conj, int Nmax) {
  CheckResult r;
  for (int k = 1; k <= kmax_rl; ++k)
    for (int l = 0; l <= k; ++l) {
      for (int N = 2; N <= Nmax; ++N) {
        ++r.cases;
        if (!verify_right_recursion(k, l, N))
          r.fail("right recursion k=" + std::to_string(k) + " l=" + std::to_string(l) + " N=" + std::to_string(N));
      }
      for (int N = 1; N <= Nmax; ++N) {
        ++r.cases;
        if (!verify_left_recursion(k, l, N))
          r.fail("left recursion k=" + std::to_string(k) + " l=" + std::to_string(l) + " N=" + std::to_string(N));
      }
    }
  for (int k = 1; k <= kmax_conj; ++k)
    for (int N = 2; N <= Nmax; ++N) {
      ++r.cases;
      if (!verify_conjugation_identity(k, N))
        r.fail("conjugation identity k=" + std::to_string(k) + " N=" + std::to_string(N));
    }
  return r;
}

CheckResult check_rank_degeneration(int kmax, std::uint64_t seed) {
  CheckResult r;
  for (int k = 1; k <= kmax; ++k) {
    const int size = static_cast<int>(transfer_labels(k).size());
    std::vector<std::pair<std::string, TransferMatrix>> ms;
    for (int N = 2; N <= 4; ++N) ms.emplace_back("R^(" + std::to_string(N) + ")", r_matrix(k, N));
    ms.emplace_back("L", l_matrix(k));
    for (const auto& [name, m] : ms) {
      ++r.cases;
      auto rk = rank_at_specialization(m, seed + k);
      if (rk.generic_rank != size || rk.degenerate_rank != k + 1)
        r.fail("k=" + std::to_string(k) + " " + name + ": generic " + std::to_string(rk.generic_rank) + "/" +
               std::to_string(size) + ", degenerate " + std::to_string(rk.degenerate_rank) + "/" + std::to_string(k + 1));
    }
  }
  return r;
}

long count_cpaths_a0(int k, int l, int N, int i) {
  long n = 0;
  for (const auto& p : enumerate_cpaths(k, l, N))
    if (p.a0() == i) ++n;
  return n;
}

// ---------------------------------------------------------------- oracle

CheckResult check_monomial_table(const std::string& data_dir) {
  CheckResult r;
  GoldenTable g;
  try {
    g = load_golden_table(data_dir + "/golden/W1_table.json");
  } catch (const std::exception& e) {
    r.fail(std::string("golden table: ") + e.what());
    return r;
  }
  for (const auto& row : g.rows)
    for (std::size_t c = 0; c < g.columns.size(); ++c) {
      ++r.cases;
      const auto& spec = g.columns[c];
      auto t = coinvariant_dims(CoinvariantSpec{spec, row.M, row.N});
      if (!t.stabilized) r.unstable(str(spec, row.M, row.N));
      std::set<Mono> got, want;
      for (const auto& e : t.entries) got.insert(e.basis.begin(), e.basis.end());
      for (const auto& s : row.cells.at(c)) want.insert(parse_compact(s));
      if (got != want || t.total_dim != static_cast<int>(want.size())) {
        std::string gs;
        for (const auto& m : got) gs += " " + to_compact(m);
        r.fail(str(spec, row.M, row.N) + ": got {" + gs + " }");
      }
    }
  return r;
}

CheckResult verify_aux(int k, int l, int i, int M, int N, int aux_cap) {
  CheckResult r;
  ++r.cases;
  // On the N = 0 edge the labels appear swapped.
  auto spec = (N == 0 && M > 0) ? ModuleSpec::W2(k, k - i, k - l + i) : ModuleSpec::W2(k, k - l + i, k - i);
  auto t = coinvariant_dims(CoinvariantSpec{spec, M, N, -1, aux_cap});
  if (!t.stabilized) r.unstable(str(spec, M, N));
  long want = count_cpaths_a0(k, l, M + N, i);
  if (t.total_dim != want)
    r.fail(str(spec, M, N) + ": dim " + std::to_string(t.total_dim) + " vs #C[i] " + std::to_string(want));
  return r;
}

CheckResult verify_w3_recursion(int k, int l1, int l2, int l3, int M, int N) {
  CheckResult r;
  ++r.cases;
  const auto spec = ModuleSpec::W3(k, l1, l2, l3);
  int lhs_dim = 0;
  LaurentPoly3 lhs = coinv_char(spec, M, N, r, &lhs_dim), rhs;
  int rhs_dim = 0;
  for (int a = 0; a <= l3; ++a)
    for (int c = 0; c <= l2 - a; ++c) {
      const int l1p = std::min(k - a, l1 + c - a), l2p = k - c;
      int d = 0;
      auto ch = coinv_char(ModuleSpec::W2(k, l1p, l2p), M, N - 1, r, &d);
      rhs_dim += d;
      rhs += ch.substitute(1, 1).shifted(a + c, a, a + c);
    }
  const std::string tag = str(spec, M, N);
  if (lhs_dim != rhs_dim) r.fail(tag + ": dim " + std::to_string(lhs_dim) + " vs " + std::to_string(rhs_dim));
  else if (!(lhs == rhs)) r.fail(tag + ": graded form " + lhs.to_string() + " vs " + rhs.to_string());
  return r;
}

CheckResult check_character_bridge(int kmax, int Nmax, int MNmax) {
  CheckResult r;
  for (int k = 1; k <= kmax; ++k)
    for (int l = 0; l <= k; ++l) {
      for (int N = 1; N <= Nmax; ++N)
        for (int i = 0; i <= l; ++i) {
          ++r.cases;
          auto spec = ModuleSpec::W2(k, k - l + i, k - i);
          auto lhs = coinv_char(spec, 0, N, r).shifted(0, 0, i);
          if (!(lhs == partial_char_left(k, l, N, i)))
            r.fail("bridge " + str(spec, 0, N) + ": " + lhs.to_string() + " vs " + partial_char_left(k, l, N, i).to_string());
        }
      // Sum identity; the map onto V is only surjective for M > 0.
      for (int M = 1; M <= MNmax; ++M)
        for (int N = 0; M + N <= MNmax; ++N) {
          ++r.cases;
          LaurentPoly3 lhs;
          for (int i = 0; i <= l; ++i) lhs += coinv_char(ModuleSpec::W2(k, k - l + i, k - i), M, N, r).shifted(0, 0, i);
          auto vspec = ModuleSpec::V2(k, k - l, l);
          auto rhs = coinv_char(vspec, M, N, r);
          if (!(lhs == rhs)) r.fail("sum identity " + str(vspec, M, N) + ": " + lhs.to_string() + " vs " + rhs.to_string());
        }
    }
  return r;
}

std::string to_string(SequenceKind k) {
  switch (k) {
    case SequenceKind::V: return "V";
    case SequenceKind::U: return "U";
    case SequenceKind::Triple6: return "triple6";
    case SequenceKind::TrProp: return "tr-prop";
    case SequenceKind::VBar: return "Vbar";
    case SequenceKind::UBar: return "Ubar";
    case SequenceKind::WBar: return "Wbar";
  }
  return "?";
}

namespace {

struct Sequence {
  ModuleSpec sub, mid, quot;
  Exp3 shift;  // weight of the image of the sub's highest weight vector
};

// Returns nullopt when the parameters are outside the sequence's range.
std::optional<Sequence> make_sequence(SequenceKind kind, int k, int l1, int l2, int M, int N) {
  if (l1 < 0 || l2 < 0 || l1 > k || l2 > k) return std::nullopt;
  const int t = l1 + l2 - k + 1;
  switch (kind) {
    case SequenceKind::V:
      if (l1 + l2 < k || M == 0) return std::nullopt;
      return Sequence{ModuleSpec::W2(k, l1 + l2, k - l2), ModuleSpec::V2(k, l1, l2), ModuleSpec::V2(k, l1, l2 - 1), {0, 0, l2}};
    case SequenceKind::U:
      if (l1 + l2 < k || N == 0) return std::nullopt;
      return Sequence{ModuleSpec::W2(k, k - l1, l1 + l2), ModuleSpec::U2(k, l1, l2), ModuleSpec::U2(k, l1 - 1, l2), {0, l1, 0}};
    case SequenceKind::Triple6: {
      if (l1 + l2 > k) return std::nullopt;
      const int l3 = std::min(l1, l2);
      return Sequence{ModuleSpec::W3(k, l1 - 1, l2 - 1, l3 - 1), ModuleSpec::W3(k, l1, l2, l3), ModuleSpec::W3(k, l1, l2, 0),
                      {1, 1, 1}};
    }
    case SequenceKind::TrProp:
      if (l1 > l2 || l1 + l2 < k) return std::nullopt;
      return Sequence{ModuleSpec::W3(k, k - l2 - 1, k - l1 - 1, k - l2 - 1), ModuleSpec::W3(k, l1, l2, l1),
                      ModuleSpec::W2(k, l1, l2), {t, t, t}};
    case SequenceKind::VBar:
      // For M = 0, h_0 v = e_0 f_0 v lies in the coinvariant kernel, so injectivity fails.
      if (l1 + l2 > k || M == 0) return std::nullopt;
      return Sequence{ModuleSpec::Vbar(k, l1 - 1, l2 - 1), ModuleSpec::Vbar(k, l1, l2), ModuleSpec::V2(k, l1, l2), {0, 1, 1}};
    case SequenceKind::UBar:
      if (l1 + l2 > k || N == 0) return std::nullopt;
      return Sequence{ModuleSpec::Ubar(k, l1 - 1, l2 - 1), ModuleSpec::Ubar(k, l1, l2), ModuleSpec::U2(k, l1, l2), {0, 1, 1}};
    case SequenceKind::WBar:
      if (l1 + l2 < k) return std::nullopt;
      return Sequence{ModuleSpec::Wbar(k, k - l2 - 1, k - l1 - 1), ModuleSpec::Wbar(k, l1, l2), ModuleSpec::W2(k, l1, l2),
                      {t, t, t}};
  }
  return std::nullopt;
}

}  // namespace

CheckResult verify_exact_sequence(SequenceKind kind, int k, int l1, int l2, int M, int N) {
  CheckResult r;
  auto s = make_sequence(kind, k, l1, l2, M, N);
  if (!s) return r;
  ++r.cases;
  auto mid = coinv_char(s->mid, M, N, r);
  auto quot = coinv_char(s->quot, M, N, r);
  auto sub = coinv_char(s->sub, M, N, r).shifted(s->shift[0], s->shift[1], s->shift[2]);
  if (!(mid == quot + sub))
    r.fail(to_string(kind) + " " + str(s->mid, M, N) + ": " + mid.to_string() + " vs " + (quot + sub).to_string());
  return r;
}

CheckResult check_exact_sequences(int kmax, int MNmax) {
  CheckResult r;
  for (auto kind : {SequenceKind::V, SequenceKind::U, SequenceKind::Triple6, SequenceKind::TrProp, SequenceKind::VBar,
                    SequenceKind::UBar, SequenceKind::WBar})
    for (int k = 1; k <= kmax; ++k)
      for (int l1 = 0; l1 <= k; ++l1)
        for (int l2 = 0; l2 <= k; ++l2)
          for (int M = 0; M <= MNmax; ++M)
            for (int N = 0; M + N <= MNmax; ++N) r.merge(verify_exact_sequence(kind, k, l1, l2, M, N));
  return r;
}

// ---------------------------------------------------------------- coproduct

CheckResult verify_coproduct(int k1, int k2, const ModuleSpec& dom, const ModuleSpec& c1, const ModuleSpec& c2, int M, int N,
                             int mn_max, bool dom_cutoff, bool comp_cutoff) {
  CheckResult r;
  if (dom.k != k1 + k2 || c1.k != k1 || c2.k != k2) throw std::invalid_argument("levels do not add up");
  auto td = coinvariant_dims(CoinvariantSpec{dom, M, N, -1, kUnbounded, dom_cutoff});
  if (!td.stabilized) r.unstable(str(dom, M, N));
  CoinvariantOracle o1(CoinvariantSpec{c1, M, N, -1, kUnbounded, comp_cutoff}),
      o2(CoinvariantSpec{c2, M, N, -1, kUnbounded, comp_cutoff});
  const Vec vac{{Mono{}, 1}};
  for (const auto& e : td.entries) {
    if (e.w.m + e.w.n > mn_max) continue;
    ++r.cases;
    // Tensor coordinates keyed by (weight of first factor, basis index, basis index).
    std::map<std::tuple<Weight, std::size_t, std::size_t>, int> col;
    std::vector<SparseQRow> rows;
    for (const auto& b : e.basis) {
      std::vector<Gen> word;
      for (int x : b.h) word.push_back(H(x));
      for (int x : b.e) word.push_back(E(x));
      for (int x : b.f) word.push_back(F(x));
      std::map<int, mpq_class> acc;
      const std::size_t len = word.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
        std::vector<Gen> w1, w2;
        for (std::size_t p = 0; p < len; ++p) (mask >> p & 1 ? w1 : w2).push_back(word[p]);
        Vec v1 = apply_word(w1, vac, Family::W), v2 = apply_word(w2, vac, Family::W);
        if (v1.empty() || v2.empty()) continue;
        Weight wt1 = v1.begin()->first.weight(), wt2 = v2.begin()->first.weight();
        auto x1 = o1.coordinates(v1, wt1), x2 = o2.coordinates(v2, wt2);
        for (std::size_t i = 0; i < x1.size(); ++i) {
          if (x1[i] == 0) continue;
          for (std::size_t j = 0; j < x2.size(); ++j) {
            if (x2[j] == 0) continue;
            auto key = std::make_tuple(wt1, i, j);
            auto it = col.emplace(key, static_cast<int>(col.size())).first;
            acc[it->second] += x1[i] * x2[j];
          }
        }
      }
      SparseQRow row;
      for (auto& [c, v] : acc)
        if (v != 0) row.emplace_back(c, v);
      rows.push_back(std::move(row));
    }
    Echelon ech(static_cast<int>(col.size()));
    for (const auto& row : rows) ech.add(row);
    if (ech.rank() != e.dim)
      r.fail(str(dom, M, N) + " -> " + c1.name() + " x " + c2.name() + " at (" + std::to_string(e.w.m) + "," +
             std::to_string(e.w.n) + "," + std::to_string(e.w.d) + "): rank " + std::to_string(ech.rank()) + " < " +
             std::to_string(e.dim));
  }
  return r;
}

CheckResult check_coproduct(int M_plus_N_max, int mn_max) {
  CheckResult r;
  const int k1 = 1, k2 = 1, k = 2;
  auto valid = [](int kk, int a, int b, int c) { return a >= 0 && b >= 0 && c >= 0 && a <= kk && b <= kk && c <= std::min(a, b); };
  for (int M = 0; M <= M_plus_N_max; ++M)
    for (int N = 0; M + N <= M_plus_N_max; ++N)
      for (int l1 = 0; l1 <= k; ++l1)
        for (int l2 = 0; l2 <= k; ++l2)
          for (int l3 = 0; l3 <= std::min(l1, l2); ++l3)
            for (int a1 = 0; a1 <= k1; ++a1)
              for (int a2 = 0; a2 <= k1; ++a2)
                for (int a3 = 0; a3 <= k1; ++a3) {
                  const int b1 = l1 - a1, b2 = l2 - a2, b3 = l3 - a3;
                  if (!valid(k1, a1, a2, a3) || !valid(k2, b1, b2, b3)) continue;
                  // Components without the cutoff: a factor such as W_1[0,0,0] vanishes entirely under it.
                  for (bool dom_cutoff : {true, false})
                    r.merge(verify_coproduct(k1, k2, ModuleSpec::W3(k, l1, l2, l3), ModuleSpec::W3(k1, a1, a2, a3),
                                             ModuleSpec::W3(k2, b1, b2, b3), M, N, mn_max, dom_cutoff, false));
                }
  return r;
}

// ---------------------------------------------------------------- vanishing relations

namespace {

std::vector<Gen> rep(Gen g, int n) { return std::vector<Gen>(std::max(n, 0), g); }

std::vector<Gen> cat(std::initializer_list<std::vector<Gen>> parts) {
  std::vector<Gen> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Every hypothesis word kills v and the conclusion word kills v.
void vanish_case(CheckResult& r, const std::string& tag, const ModuleSpec& spec, const std::vector<std::vector<Gen>>& hyps,
                const std::vector<Gen>& concl) {
  ++r.cases;
  auto mod = module_oracle(spec);
  for (const auto& h : hyps) {
    Vec v = normal_order(h, spec.family);
    if (!mod->is_zero(v, word_weight(h))) {
      r.fail(tag + ": hypothesis does not hold in " + spec.name());
      return;
    }
  }
  Vec v = normal_order(concl, spec.family);
  if (!mod->is_zero(v, word_weight(concl))) r.fail(tag + ": conclusion is nonzero in " + spec.name());
}

}  // namespace

CheckResult check_vanishing(int kmax, int grid) {
  CheckResult r;
  for (int k = 1; k <= kmax; ++k)
    for (int a = 0; a <= grid; ++a)
      for (int b = 0; b <= grid; ++b)
        for (int c = 0; c <= grid; ++c) {
          const std::string abc = " k=" + std::to_string(k) + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                  " c=" + std::to_string(c);
          // vanish0, first form: e_1^{a+1} u = f_{-1} u = 0 (V family: f_{-1} kills v).
          if (b == 0 && c <= a && a <= k)
            vanish_case(r, "vanish0a" + abc, ModuleSpec::V3(k, a, k, k), {rep(E(1), a + 1), {F(-1)}},
                       cat({rep(E(1), a - c), rep(H(0), c + 1)}));
          // vanish0, second form: f_0^{b+1} u = e_0 u = 0.
          if (a == 0 && c <= b && b <= k)
            vanish_case(r, "vanish0b" + abc, ModuleSpec::V3(k, k, b, k), {rep(F(0), b + 1), {E(0)}},
                       cat({rep(F(0), b - c), rep(H(0), c + 1)}));
          if (a < 1 || a - 1 > k) continue;
          const auto w = ModuleSpec::W3(k, a - 1, k, k);
          // vanish1: e_1^a u = 0.
          if (c == 0) vanish_case(r, "vanish1" + abc, w, {rep(E(1), a)}, cat({rep(E(1), a + b), rep(F(1), b)}));
          // vanish2: e_1^a u = f_0 u = 0.
          if (a - b + c >= 0)
            vanish_case(r, "vanish2" + abc, w, {rep(E(1), a), {F(0)}}, cat({rep(E(1), a - b + c), rep(H(1), b), rep(F(1), c)}));
          // vanish3: e_1^a u = h_1^b f_1^{c+1} u = f_0 u = 0.
          if (b <= a) {
            auto extra = cat({rep(H(1), b), rep(F(1), c + 1)});
            auto spec = w;
            spec.extra = {extra};
            vanish_case(r, "vanish3" + abc, spec, {rep(E(1), a), extra, {F(0)}},
                       cat({rep(H(2), a - b), rep(H(1), b), rep(F(1), c)}));
          }
        }
  return r;
}

// ---------------------------------------------------------------- monomial basis

CheckResult verify_fh_basis(int k, int l, int N) {
  CheckResult r;
  ++r.cases;
  const std::string tag = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " N=" + std::to_string(N);
  const auto spec = ModuleSpec::U2(k, l, k - l);
  CoinvariantOracle o(CoinvariantSpec{spec, 0, N});
  auto t = o.table();
  if (!t.stabilized) r.unstable(str(spec, 0, N));
  auto paths = enumerate_cpaths(k, l, N);
  const mpz_class d = verlinde_numbers(k, N).values[l];
  if (mpz_class(static_cast<unsigned long>(paths.size())) != d) r.fail(tag + ": candidate count differs from d");
  if (t.total_dim != static_cast<long>(paths.size()))
    r.fail(tag + ": dim " + std::to_string(t.total_dim) + " vs " + std::to_string(paths.size()) + " candidates");
  // Candidate (prod_{i>=1} f_i^{a_i} h_i^{b_i}) e_0^{l-a_0} v, grouped by weight.
  std::map<Weight, std::vector<Vec>> by_weight;
  for (const auto& p : paths) {
    std::vector<Gen> word;
    for (int i = N - 1; i >= 1; --i) {
      auto f = rep(F(i), p.a_at(i)), h = rep(H(i), p.b_at(i));
      word.insert(word.end(), f.begin(), f.end());
      word.insert(word.end(), h.begin(), h.end());
    }
    auto e0 = rep(E(0), l - p.a0());
    word.insert(word.end(), e0.begin(), e0.end());
    by_weight[word_weight(word)].push_back(normal_order(word, Family::U));
  }
  for (const auto& [w, vecs] : by_weight) {
    const auto& cw = o.at(w);
    Echelon ech(static_cast<int>(cw.basis.size()));
    for (const auto& v : vecs) {
      auto x = o.coordinates(v, w);
      SparseQRow row;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) row.emplace_back(static_cast<int>(i), x[i]);
      ech.add(row);
    }
    if (ech.rank() != static_cast<int>(vecs.size()) || ech.rank() != cw.dim())
      r.fail(tag + " at (" + std::to_string(w.m) + "," + std::to_string(w.n) + "," + std::to_string(w.d) + "): rank " +
             std::to_string(ech.rank()) + ", candidates " + std::to_string(vecs.size()) + ", dim " +
             std::to_string(cw.dim()));
  }
  return r;
}

CheckResult check_fh_basis(int kmax, int Nmax) {
  CheckResult r;
  for (int k = 1; k <= kmax; ++k)
    for (int l = 0; l <= k; ++l)
      for (int N = 1; N <= Nmax; ++N) r.merge(verify_fh_basis(k, l, N));
  return r;
}

// ---------------------------------------------------------------- properties

CheckResult check_confluence(int words, std::uint64_t seed) {
  CheckResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, 6), typ(0, 2), idx(-2, 3), fam(0, 3);
  for (int n = 0; n < words; ++n) {
    ++r.cases;
    std::vector<Gen> word(len(rng));
    for (auto& g : word) g = Gen{static_cast<GenType>(typ(rng)), idx(rng)};
    const Family f = static_cast<Family>(fam(rng));
    const Vec expect = normal_order(word, f);
    const Weight w = word_weight(word);
    for (int strategy = 0; strategy < 3; ++strategy) {
      RewriteStats st;
      Vec got;
      try {
        got = rewrite_normal_form(word, f, rng, &st);
      } catch (const std::logic_error& e) {
        r.fail(std::string("weight violation: ") + e.what());
        continue;
      }
      if (got != expect) r.fail("word " + std::to_string(n) + ": strategies disagree");
      for (const auto& [m, c] : got)
        if (m.weight() != w) r.fail("word " + std::to_string(n) + ": output weight differs");
      if (st.rewrites > 0 && st.weight_checks < st.rewrites) r.fail("word " + std::to_string(n) + ": unchecked rewrite");
    }
  }
  return r;
}

CheckResult check_aux_monotonicity(int kmax) {
  CheckResult r;
  for (int k = 1; k <= kmax; ++k)
    for (int l1 = 0; l1 <= k; ++l1)
      for (int l2 = 0; l2 <= k; ++l2) {
        const auto spec = ModuleSpec::W2(k, l1, l2);
        for (int M = 0; M <= 2; ++M)
          for (int N = 0; M + N <= 2; ++N) {
            ++r.cases;
            const auto exact = coinvariant_dims(CoinvariantSpec{spec, M, N});
            int prev = -1;
            bool reached = false;
            for (int cap = 0; cap <= exact.max_d + 4; ++cap) {
              auto t = coinvariant_dims(CoinvariantSpec{spec, M, N, exact.spec.d_cap, cap});
              if (prev >= 0 && t.total_dim > prev) r.fail(str(spec, M, N) + ": dims increase with aux_cap");
              prev = t.total_dim;
              if (t.relations_complete) {
                reached = true;
                if (t.total_dim != exact.total_dim) r.fail(str(spec, M, N) + ": complete cap differs from unbounded");
              }
            }
            if (!reached) r.fail(str(spec, M, N) + ": no cap covered the window");
          }
      }
  return r;
}

CheckResult check_module_symmetries(int kmax, int dmax) {
  CheckResult r;
  for (int k = 1; k <= kmax; ++k)
    for (int l1 = 0; l1 <= k; ++l1)
      for (int l2 = 0; l2 <= k; ++l2)
        for (int l3 = 0; l3 <= std::min(l1, l2); ++l3) {
          auto V = module_oracle(ModuleSpec::V3(k, l1, l2, l3));
          auto U = module_oracle(ModuleSpec::U3(k, l2, l1, l3));
          auto W = module_oracle(ModuleSpec::W3(k, l1, l2, l3));
          auto Wc = module_oracle(ModuleSpec::W3(k, l1 + (l1 == k ? 2 : 0), l2 + (l2 == k ? 1 : 0), l3));
          for (int m = 0; m <= k + 1; ++m)
            for (int n = 0; n <= k + 1; ++n)
              for (int d = 0; d <= dmax; ++d) {
                ++r.cases;
                const std::string tag = ModuleSpec::V3(k, l1, l2, l3).name() + " (" + std::to_string(m) + "," +
                                        std::to_string(n) + "," + std::to_string(d) + ")";
                const int dv = V->dim({m, n, d});
                if (dv != U->dim({n, m, d})) r.fail("involution " + tag);
                if (dv != W->dim({m, n, d + n})) r.fail("shift " + tag);
                if (W->dim({m, n, d}) != Wc->dim({m, n, d})) r.fail("clamping " + tag);
                if (l1 > 0 && module_oracle(ModuleSpec::W3(k, l1 - 1, l2, std::min(l3, l1 - 1)))->dim({m, n, d}) >
                                   W->dim({m, n, d}))
                  r.fail("monotonicity in l1 " + tag);
              }
        }
  return r;
}

}  // namespace vp
