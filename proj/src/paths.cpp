#include "vp/paths.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace vp {

int CPath::a_at(int i) const { return (i >= 0 && i < N) ? a[i] : 0; }

int CPath::b_at(int i) const {
  if (i == -1) return l;
  if (i >= 1 && i < N) return b[i - 1];
  return 0;
}

int VPath::alpha_at(int i) const { return (i >= 1 && i <= N) ? alpha[i - 1] : 0; }

int VPath::beta_at(int i) const {
  if (i >= 1 && i < N) return beta[i - 1];
  if (i == N) return alpha_at(N);
  return 0;
}

namespace {

std::string fmt_violation(const std::string& what, int i, int j = -100) {
  std::string s = what + " at i=" + std::to_string(i);
  if (j != -100) s += ", j=" + std::to_string(j);
  return s;
}

// Finite-j trapezoid inequality for the pair (i, j), -1 <= i < j.
bool trapezoid_ok(const CPath& p, int i, int j) {
  long lhs = 0, rhs = p.k;
  for (int s = i; s <= j; ++s) lhs += p.b_at(s);
  for (int s = i + 1; s <= j - 2; ++s) rhs += p.a_at(s);
  return lhs <= rhs;
}

// The j = infinity family after cancelling b_inf = k.
bool trapezoid_inf_ok(const CPath& p, int i) {
  long lhs = 0, rhs = 0;
  for (int s = i; s <= p.N - 1; ++s) lhs += p.b_at(s);
  for (int s = i + 1; s <= p.N - 1; ++s) rhs += p.a_at(s);
  return lhs <= rhs;
}

}  // namespace

Validation validate_cpath(const CPath& p) {
  Validation v;
  auto fail = [&](std::string s) {
    v.ok = false;
    v.violations.push_back(std::move(s));
  };
  if (p.k < 1 || p.l < 0 || p.l > p.k || p.N < 0) {
    fail("parameters out of range");
    return v;
  }
  if (static_cast<int>(p.a.size()) != p.N || static_cast<int>(p.b.size()) != std::max(p.N - 1, 0)) {
    fail("sequence lengths do not match N");
    return v;
  }
  if (p.N == 0) {
    if (p.l != 0) fail("length-0 paths exist only for l=0");
    return v;
  }
  for (int x : p.a)
    if (x < 0 || x > p.k) fail("a entry out of range");
  for (int x : p.b)
    if (x < 0 || x > p.k) fail("b entry out of range");
  if (!v.ok) return v;
  if (p.a0() > p.l) fail("a_0 > l");
  for (int i = 0; i < p.N; ++i) {
    if (p.a_at(i) + p.b_at(i + 1) + p.a_at(i + 1) > p.k) fail(fmt_violation("triangle a_i+b_{i+1}+a_{i+1}", i));
    if (p.b_at(i) + p.a_at(i) + p.b_at(i + 1) > p.k) fail(fmt_violation("triangle b_i+a_i+b_{i+1}", i));
  }
  for (int i = -1; i < p.N; ++i)
    for (int j = i + 1; j <= p.N; ++j)
      if (!trapezoid_ok(p, i, j)) fail(fmt_violation("trapezoid", i, j));
  for (int i = -1; i < p.N; ++i)
    if (!trapezoid_inf_ok(p, i)) fail(fmt_violation("trapezoid (j=inf)", i));
  return v;
}

Validation validate_vpath(const VPath& p) {
  Validation v;
  auto fail = [&](std::string s) {
    v.ok = false;
    v.violations.push_back(std::move(s));
  };
  if (p.k < 1 || p.N < 1 || static_cast<int>(p.alpha.size()) != p.N ||
      static_cast<int>(p.beta.size()) != p.N - 1) {
    fail("shape mismatch");
    return v;
  }
  if (p.alpha[0] != p.l) fail("alpha_1 != l");
  for (int i = 1; i <= p.N; ++i)
    if (!is_admissible(p.alpha_at(i), p.beta_at(i), p.alpha_at(i + 1), p.k))
      fail(fmt_violation("non-admissible triple", i));
  return v;
}

std::vector<CPath> enumerate_cpaths(int k, int l, int N) {
  std::vector<CPath> out;
  if (k < 1 || l < 0 || l > k || N < 0) return out;
  if (N == 0) {
    if (l == 0) out.push_back(CPath{k, 0, 0, {}, {}});
    return out;
  }
  CPath p{k, l, N, std::vector<int>(N, 0), std::vector<int>(N - 1, 0)};
  // Checks every finite trapezoid pair (i, j) whose entries are all assigned
  // once b_j is known; a_{j-1} is not needed by pair (i, j).
  auto trapezoids_upto = [&](int j) {
    for (int i = -1; i < j; ++i)
      if (!trapezoid_ok(p, i, j)) return false;
    return true;
  };
  std::function<void(int)> rec = [&](int i) {
    // Assign b_i then a_i (i >= 1); a_0 is assigned by the caller.
    if (i == N) {
      if (validate_cpath(p).ok) out.push_back(p);
      return;
    }
    for (int bi = 0; bi <= p.k; ++bi) {
      if (i == N - 1 && bi != 0) break;
      p.b[i - 1] = bi;
      if (p.b_at(i - 1) + p.a_at(i - 1) + bi > p.k) break;
      if (!trapezoids_upto(i)) continue;
      for (int ai = 0; ai <= p.k; ++ai) {
        if (p.a_at(i - 1) + bi + ai > p.k) break;
        p.a[i] = ai;
        rec(i + 1);
      }
      p.a[i] = 0;
    }
    p.b[i - 1] = 0;
  };
  for (int a0 = 0; a0 <= l; ++a0) {
    p.a[0] = a0;
    rec(1);
  }
  std::sort(out.begin(), out.end(), [](const CPath& x, const CPath& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return out;
}

std::vector<VPath> enumerate_vpaths(int k, int l, int N) {
  std::vector<VPath> out;
  if (k < 1 || l < 0 || l > k || N < 1) return out;
  VPath p{k, l, N, std::vector<int>(N, 0), std::vector<int>(N - 1, 0)};
  p.alpha[0] = l;
  std::function<void(int)> rec = [&](int i) {
    // Chooses beta_i and alpha_{i+1}.
    if (i == N) {
      out.push_back(p);
      return;
    }
    for (int a = 0; a <= k; ++a)
      for (int bt = 0; bt <= k; ++bt)
        if (is_admissible(p.alpha[i - 1], bt, a, k)) {
          p.alpha[i] = a;
          p.beta[i - 1] = bt;
          rec(i + 1);
        }
  };
  rec(1);
  std::sort(out.begin(), out.end(), [](const VPath& x, const VPath& y) {
    return std::tie(x.alpha, x.beta) < std::tie(y.alpha, y.beta);
  });
  return out;
}

namespace {
XYZ xyz_at(const VPath& p, int i) {
  auto r = xyz_decompose(p.alpha_at(i), p.beta_at(i), p.alpha_at(i + 1), p.k);
  if (!r) throw std::invalid_argument("non-admissible Verlinde path");
  return *r;
}
}  // namespace

CPath bijection_iota(const VPath& p) {
  CPath c{p.k, p.l, p.N, std::vector<int>(p.N, 0), std::vector<int>(std::max(p.N - 1, 0), 0)};
  for (int i = 1; i <= p.N; ++i) c.a[i - 1] = xyz_at(p, i).y;
  for (int i = 1; i <= p.N - 1; ++i) {
    XYZ cur = xyz_at(p, i);
    XYZ next = xyz_at(p, i + 1);
    c.b[i - 1] = cur.z - std::max(0, next.y - cur.x);
  }
  return c;
}

CPath cpath_concat(int l, int lpp, int lp, const CPath& p) {
  auto t = xyz_decompose(l, lpp, lp, p.k);
  if (!t) throw std::invalid_argument("non-admissible triple in concatenation");
  if (p.l != lp) throw std::invalid_argument("weight mismatch in concatenation");
  CPath r{p.k, l, p.N + 1, {}, {}};
  r.a.push_back(t->y);
  r.a.insert(r.a.end(), p.a.begin(), p.a.end());
  int bnew = t->z - std::max(0, p.a0() - t->x);
  if (p.N == 0) {
    if (bnew != 0) throw std::logic_error("nonzero b appended to a length-0 path");
  } else {
    r.b.push_back(bnew);
    r.b.insert(r.b.end(), p.b.begin(), p.b.end());
  }
  return r;
}

VPath vpath_concat(int l, int lpp, int lp, const VPath& p) {
  if (!is_admissible(l, lpp, lp, p.k)) throw std::invalid_argument("non-admissible triple in concatenation");
  if (p.l != lp) throw std::invalid_argument("weight mismatch in concatenation");
  VPath r{p.k, l, p.N + 1, {}, {}};
  r.alpha.push_back(l);
  r.alpha.insert(r.alpha.end(), p.alpha.begin(), p.alpha.end());
  r.beta.push_back(lpp);
  r.beta.insert(r.beta.end(), p.beta.begin(), p.beta.end());
  return r;
}

std::optional<Peeled> peel_cpath(const CPath& p) {
  if (p.N < 1) return std::nullopt;
  CPath rest{p.k, 0, p.N - 1, {}, {}};
  rest.a.assign(p.a.begin() + 1, p.a.end());
  if (p.N >= 2) rest.b.assign(p.b.begin() + 1, p.b.end());
  const int a = p.a[0];
  const int b = p.N >= 2 ? p.b[0] : 0;
  const int over = std::max(0, rest.a0() - (p.l - a));
  const int lp = p.l - a + b + over;
  const int lpp = a + b + over;
  rest.l = lp;
  if (!is_admissible(p.l, lpp, lp, p.k) || !validate_cpath(rest).ok) return std::nullopt;
  if (cpath_concat(p.l, lpp, lp, rest) != p) return std::nullopt;
  return Peeled{lpp, lp, std::move(rest)};
}

VPath bijection_iota_inverse(const CPath& p) {
  if (!validate_cpath(p).ok || p.N < 1) throw std::invalid_argument("not a valid combinatorial path");
  if (p.N == 1) return VPath{p.k, p.l, 1, {p.l}, {}};
  auto pe = peel_cpath(p);
  if (!pe) throw std::invalid_argument("combinatorial path does not decompose");
  return vpath_concat(p.l, pe->lpp, pe->lp, bijection_iota_inverse(pe->rest));
}

Grading gradings(const CPath& p) {
  Grading g;
  g.s2 = p.a0();
  for (int i = 1; i < p.N; ++i) {
    g.e += static_cast<long>(i) * (p.a_at(i) + p.b_at(i));
    g.s1 += p.b_at(i);
    g.s2 += p.a_at(i) + p.b_at(i);
  }
  return g;
}

Grading gradings(const VPath& p) { return gradings(bijection_iota(p)); }

VPath reverse_vpath(const VPath& p) {
  if (p.N < 2) throw std::invalid_argument("reversal needs N >= 2");
  VPath r{p.k, p.alpha.back(), p.N, std::vector<int>(p.alpha.rbegin(), p.alpha.rend()),
          std::vector<int>(p.beta.rbegin(), p.beta.rend())};
  return r;
}

CPath multiply_cpaths(const CPath& p1, const CPath& p2) {
  if (p1.N != p2.N) throw std::invalid_argument("length mismatch");
  CPath r{p1.k + p2.k, p1.l + p2.l, p1.N, p1.a, p1.b};
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += p2.a[i];
  for (std::size_t i = 0; i < r.b.size(); ++i) r.b[i] += p2.b[i];
  if (!validate_cpath(r).ok) throw std::logic_error("product of combinatorial paths is invalid");
  return r;
}

VPath multiply_vpaths(const VPath& p1, const VPath& p2) {
  if (p1.N != p2.N) throw std::invalid_argument("length mismatch");
  VPath r{p1.k + p2.k, p1.l + p2.l, p1.N, p1.alpha, p1.beta};
  for (std::size_t i = 0; i < r.alpha.size(); ++i) r.alpha[i] += p2.alpha[i];
  for (std::size_t i = 0; i < r.beta.size(); ++i) r.beta[i] += p2.beta[i];
  return r;
}

std::vector<Triple> match_level1_triples(int k, int l, int lpp, int lp, const std::vector<CPath>& paths) {
  auto t = xyz_decompose(l, lpp, lp, k);
  if (!t) throw std::invalid_argument("non-admissible triple");
  if (static_cast<int>(paths.size()) != k) throw std::invalid_argument("need k level-1 paths");
  std::vector<int> ones_ones, ones_zero, zeros;
  for (int j = 0; j < k; ++j) {
    const auto& q = paths[j];
    if (q.k != 1) throw std::invalid_argument("summand is not level 1");
    if (q.l == 1 && q.a0() == 1) ones_ones.push_back(j);
    else if (q.l == 1) ones_zero.push_back(j);
    else zeros.push_back(j);
  }
  const int a0 = static_cast<int>(ones_ones.size());
  if (a0 + static_cast<int>(ones_zero.size()) != lp) throw std::invalid_argument("summand weights do not add to l'");
  std::vector<Triple> out(k);
  const Triple tx{1, 0, 1}, ty{1, 1, 0}, tz{0, 1, 1}, t0{0, 0, 0};
  for (int n = 0; n < static_cast<int>(zeros.size()); ++n) out[zeros[n]] = n < t->y ? ty : t0;
  std::vector<int> ones = ones_ones;
  if (a0 >= t->x) {
    ones.insert(ones.end(), ones_zero.begin(), ones_zero.end());
    for (int n = 0; n < static_cast<int>(ones.size()); ++n) out[ones[n]] = n < t->x ? tx : tz;
  } else {
    ones = ones_zero;
    ones.insert(ones.end(), ones_ones.begin(), ones_ones.end());
    for (int n = 0; n < static_cast<int>(ones.size()); ++n) out[ones[n]] = n < t->z ? tz : tx;
  }
  return out;
}

namespace {
// Splits a valid path into k level-1 paths summing to it.
std::vector<CPath> split_level1(const CPath& p) {
  std::vector<CPath> out;
  if (p.N == 0) {
    for (int j = 0; j < p.k; ++j) out.push_back(CPath{1, 0, 0, {}, {}});
    return out;
  }
  auto pe = peel_cpath(p);
  if (!pe) throw std::invalid_argument("path does not decompose");
  auto rest = split_level1(pe->rest);
  auto triples = match_level1_triples(p.k, p.l, pe->lpp, pe->lp, rest);
  for (int j = 0; j < p.k; ++j) out.push_back(cpath_concat(triples[j].l, triples[j].lpp, triples[j].lp, rest[j]));
  return out;
}
}  // namespace

Level1Decomposition level1_decompose(const CPath& p, int l, int lpp, int lp) {
  if (!is_admissible(l, lpp, lp, p.k)) throw std::invalid_argument("non-admissible triple");
  if (p.l != lp) throw std::invalid_argument("path weight does not match l'");
  if (!validate_cpath(p).ok) throw std::invalid_argument("invalid path");
  Level1Decomposition d;
  d.paths = split_level1(p);
  d.triples = match_level1_triples(p.k, l, lpp, lp, d.paths);
  return d;
}

bool recursion_partition_check(int k, int l, int N) {
  auto target = enumerate_cpaths(k, l, N + 1);
  std::set<CPath> seen;
  for (int lpp = 0; lpp <= k; ++lpp)
    for (int lp = 0; lp <= k; ++lp) {
      auto t = xyz_decompose(l, lpp, lp, k);
      if (!t) continue;
      for (const auto& p : enumerate_cpaths(k, lp, N)) {
        CPath img = cpath_concat(l, lpp, lp, p);
        if (!validate_cpath(img).ok) return false;
        if (img.a0() != t->y) return false;  // refined partition by a_0
        if (!seen.insert(img).second) return false;  // images must be disjoint
      }
    }
  return seen == std::set<CPath>(target.begin(), target.end());
}

}  // namespace vp
