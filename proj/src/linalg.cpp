#include "vp/linalg.hpp"

#include <stdexcept>

namespace vp {

namespace {

// r <- a*r - b*s
void axpy(SparseRow& r, const mpz_class& a, const mpz_class& b, const SparseRow& s) {
  SparseRow out;
  out.reserve(r.size() + s.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || s[j].first < r[i].first) {
      out.emplace_back(s[j].first, -b * s[j].second);
      ++j;
    } else {
      mpz_class v = a * r[i].second - b * s[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  r.swap(out);
}

mpz_class content(const SparseRow& r) {
  mpz_class g = 0;
  for (const auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

}  // namespace

SparseRow to_integer_row(const SparseQRow& r) {
  mpz_class l = 1;
  for (const auto& [c, v] : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  SparseRow out;
  out.reserve(r.size());
  for (const auto& [c, v] : r) {
    mpz_class x = v.get_num() * (l / v.get_den());
    if (x != 0) out.emplace_back(c, std::move(x));
  }
  return out;
}

void Echelon::reduce_int(SparseRow& r, mpq_class* scale) const {
  std::size_t pos = 0;
  while (pos < r.size()) {
    int col = r[pos].first;
    if (col >= ncols()) throw std::out_of_range("column outside echelon");
    int pr = pivot_row_[col];
    if (pr < 0) {
      ++pos;
      continue;
    }
    const SparseRow& s = rows_[pr];
    mpz_class p = s.front().second, c = r[pos].second, g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), c.get_mpz_t());
    p /= g;
    c /= g;
    axpy(r, p, c, s);
    if (scale) *scale *= p;
    mpz_class ct = content(r);
    if (ct > 1) {
      for (auto& [cc, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), ct.get_mpz_t());
      if (scale) *scale /= ct;
    }
    // Entries before pos are untouched by the elimination.
  }
}

bool Echelon::add(SparseRow r) {
  reduce_int(r, nullptr);
  if (r.empty()) return false;
  // Full reduction already removed every pivot column, so the leading column is new.
  if (r.front().second < 0)
    for (auto& [c, v] : r) v = -v;
  pivot_row_[r.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

bool Echelon::add(const SparseQRow& r) { return add(to_integer_row(r)); }

SparseQRow Echelon::reduce(const SparseQRow& r) const {
  mpz_class l = 1;
  for (const auto& [c, v] : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  SparseRow ir;
  for (const auto& [c, v] : r) {
    mpz_class x = v.get_num() * (l / v.get_den());
    if (x != 0) ir.emplace_back(c, std::move(x));
  }
  mpq_class scale = 1;
  reduce_int(ir, &scale);
  scale *= l;
  SparseQRow out;
  for (auto& [c, v] : ir) {
    mpq_class q(v);
    q /= scale;
    out.emplace_back(c, std::move(q));
  }
  return out;
}

std::vector<int> Echelon::non_pivot_columns() const {
  std::vector<int> v;
  for (int c = 0; c < ncols(); ++c)
    if (pivot_row_[c] < 0) v.push_back(c);
  return v;
}

}  // namespace vp
