#include "vp/characters.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace vp {

namespace {

LaurentPoly3 weight_of(const VPath& p) {
  Grading g = gradings(p);
  return LaurentPoly3::monomial(static_cast<int>(g.e), static_cast<int>(g.s1), static_cast<int>(g.s2));
}

// 2 * (left half index), i.e. alpha_1 + beta_1 - alpha_2.
int left_twice(const VPath& p) { return p.alpha_at(1) + p.beta_at(1) - p.alpha_at(2); }
int right_twice(const VPath& p) { return p.alpha_at(p.N) + p.beta_at(p.N - 1) - p.alpha_at(p.N - 1); }

int pos(int x) { return std::max(0, x); }

}  // namespace

LaurentPoly3 char_full(int k, int l, int N) {
  LaurentPoly3 r;
  for (const auto& p : enumerate_vpaths(k, l, N)) r += weight_of(p);
  return r;
}

LaurentPoly3 partial_char_right(int k, int l, int N, int i, int j) {
  if (N < 2) throw std::invalid_argument("right partial character needs N >= 2");
  LaurentPoly3 r;
  for (const auto& p : enumerate_vpaths(k, l, N))
    if (p.alpha_at(N) == i && right_twice(p) == 2 * j) r += weight_of(p);
  return r;
}

LaurentPoly3 partial_char_left(int k, int l, int N, int i) {
  if (N < 1) throw std::invalid_argument("left partial character needs N >= 1");
  LaurentPoly3 r;
  for (const auto& p : enumerate_vpaths(k, l, N))
    if (left_twice(p) == 2 * i) r += weight_of(p);
  return r;
}

LaurentPoly3 partial_char_both(int k, int N, int i, int l, int ip, int lp) {
  if (N < 2) throw std::invalid_argument("two-sided partial character needs N >= 2");
  LaurentPoly3 r;
  for (const auto& p : enumerate_vpaths(k, l, N))
    if (left_twice(p) == 2 * i && p.alpha_at(N) == lp && right_twice(p) == 2 * ip) r += weight_of(p);
  return r;
}

std::vector<std::pair<int, int>> transfer_labels(int k) {
  std::vector<std::pair<int, int>> v;
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= a; ++b) v.emplace_back(a, b);
  return v;
}

TransferMatrix r_matrix(int k, int N) {
  if (k < 1 || N < 2) throw std::invalid_argument("R matrix needs k >= 1, N >= 2");
  TransferMatrix m{k, N, 'R', transfer_labels(k), {}};
  for (auto [i, j] : m.labels) {
    std::vector<LaurentPoly3> row;
    for (auto [ip, jp] : m.labels) {
      if (!is_admissible(ip, 2 * j - i + ip, i, k)) {
        row.emplace_back();
        continue;
      }
      row.push_back(LaurentPoly3::monomial(N * i - (N - 1) * pos(i - j - jp), jp - pos(j + jp - i), i - pos(i - j - jp)));
    }
    m.entries.push_back(std::move(row));
  }
  return m;
}

namespace {
TransferMatrix build_l(int k, bool with_qip) {
  if (k < 1) throw std::invalid_argument("L matrix needs k >= 1");
  TransferMatrix m{k, 0, 'L', transfer_labels(k), {}};
  for (auto [l, i] : m.labels) {
    std::vector<LaurentPoly3> row;
    for (auto [lp, ip] : m.labels) {
      if (!is_admissible(l, 2 * i - l + lp, lp, k)) {
        row.emplace_back();
        continue;
      }
      int t = lp + i - l - pos(ip + i - l);
      row.push_back(LaurentPoly3::monomial(t + (with_qip ? ip : 0), t, t + i));
    }
    m.entries.push_back(std::move(row));
  }
  return m;
}
}  // namespace

TransferMatrix l_matrix(int k) { return build_l(k, true); }
TransferMatrix l_matrix_recursive(int k) { return build_l(k, false); }

bool verify_right_recursion(int k, int l, int N) {
  if (N < 2) throw std::invalid_argument("right recursion needs N >= 2");
  auto R = r_matrix(k, N);
  std::vector<LaurentPoly3> cur;
  for (auto [i, j] : R.labels) cur.push_back(partial_char_right(k, l, N, i, j));
  for (std::size_t r = 0; r < R.labels.size(); ++r) {
    LaurentPoly3 rhs;
    for (std::size_t c = 0; c < R.labels.size(); ++c) rhs += R.entries[r][c] * cur[c];
    auto [i, j] = R.labels[r];
    if (!(rhs == partial_char_right(k, l, N + 1, i, j))) return false;
  }
  return true;
}

bool verify_left_recursion(int k, int l, int N, bool closed_form) {
  if (N < 1) throw std::invalid_argument("left recursion needs N >= 1");
  auto L = closed_form ? l_matrix(k) : l_matrix_recursive(k);
  std::vector<LaurentPoly3> shifted;
  for (auto [lp, ip] : L.labels) shifted.push_back(partial_char_left(k, lp, N, ip).substitute(1, 1));
  for (std::size_t r = 0; r < L.labels.size(); ++r) {
    auto [lr, i] = L.labels[r];
    if (lr != l) continue;
    LaurentPoly3 rhs;
    for (std::size_t c = 0; c < L.labels.size(); ++c) rhs += L.entries[r][c] * shifted[c];
    if (!(rhs == partial_char_left(k, l, N + 1, i))) return false;
  }
  return true;
}

bool verify_conjugation_identity(int k, int N) {
  if (N < 2) throw std::invalid_argument("conjugation identity needs N >= 2");
  for (auto [l, i] : transfer_labels(k))
    for (auto [lp, ip] : transfer_labels(k)) {
      auto lhs = partial_char_both(k, N, i, l, ip, lp);
      auto rhs = partial_char_both(k, N, ip, lp, i, l)
                     .substitute(-1, N - 1)
                     .shifted((N - 1) * (lp - ip), lp - ip - l + i, lp - ip - l + i);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

int rational_rank(std::vector<std::vector<mpq_class>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < ncols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t cc = c; cc < ncols; ++cc) rows[r][cc] -= f * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

RankResult rank_at_specialization(const TransferMatrix& m, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 97), den(1, 89);
  auto rnd = [&] {
    mpq_class v(num(rng), den(rng));
    v.canonicalize();
    return v;
  };
  auto eval_rank = [&](const mpq_class& q, const mpq_class& z1, const mpq_class& z2) {
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& row : m.entries) {
      std::vector<mpq_class> r;
      for (const auto& e : row) r.push_back(e.evaluate(q, z1, z2));
      rows.push_back(std::move(r));
    }
    return rational_rank(std::move(rows));
  };
  RankResult res;
  for (int t = 0; t < std::max(trials, 3); ++t) {
    res.generic_rank = std::max(res.generic_rank, eval_rank(rnd(), rnd(), rnd()));
    mpq_class z1 = rnd();
    res.degenerate_rank = std::max(res.degenerate_rank, eval_rank(1, z1, 1 / z1));
  }
  return res;
}

}  // namespace vp
