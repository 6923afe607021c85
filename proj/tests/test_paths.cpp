#include <functional>
#include <set>

#include "doctest.h"
#include "vp/paths.hpp"
#include "vp/verlinde.hpp"

using namespace vp;

namespace {

// Membership in C^(N)_{k,l} written directly from the defining inequalities.
bool in_c(int k, int l, int N, const std::vector<int>& a, const std::vector<int>& b) {
  const int hi = N + 1;  // positions -1..N, then "infinity" = hi + 1
  auto A = [&](int i) { return (i >= 0 && i < N) ? a[i] : 0; };
  auto B = [&](int i) {
    if (i == -1) return l;
    if (i == hi + 1) return k;
    return (i >= 1 && i < N) ? b[i - 1] : 0;
  };
  if (A(0) > l) return false;
  for (int i = 0; i < N; ++i)
    if (A(i) + B(i + 1) + A(i + 1) > k || B(i) + A(i) + B(i + 1) > k) return false;
  for (int i = -1; i <= hi + 1; ++i)
    for (int j = i + 1; j <= hi + 1; ++j) {
      int sb = 0, sa = 0;
      for (int s = i; s <= j; ++s) sb += B(s);
      for (int s = i + 1; s <= std::min(j - 2, hi); ++s) sa += A(s);
      if (sb > k + sa) return false;
    }
  return true;
}

void for_each_vector(int len, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> v(len, 0);
  while (true) {
    f(v);
    int p = 0;
    while (p < len && v[p] == k) v[p++] = 0;
    if (p == len) return;
    ++v[p];
  }
}

}  // namespace

TEST_CASE("k = 1, l = 0, N = 2 has two combinatorial paths") {
  const auto ps = enumerate_cpaths(1, 0, 2);
  CHECK(ps.size() == 2);
  for (const auto& p : ps) CHECK(validate_cpath(p).ok);
}

TEST_CASE("enumeration equals brute-force filtering of all sequences") {
  for (int k = 1; k <= 2; ++k)
    for (int l = 0; l <= k; ++l)
      for (int N = 1; N <= 4; ++N) {
        std::set<std::pair<std::vector<int>, std::vector<int>>> brute;
        for_each_vector(N, k, [&](const std::vector<int>& a) {
          for_each_vector(N - 1, k, [&](const std::vector<int>& b) {
            const bool mine = in_c(k, l, N, a, b);
            CHECK(mine == validate_cpath(CPath{k, l, N, a, b}).ok);
            if (mine) brute.insert({a, b});
          });
        });
        std::set<std::pair<std::vector<int>, std::vector<int>>> got;
        for (const auto& p : enumerate_cpaths(k, l, N)) got.insert({p.a, p.b});
        CHECK(got == brute);
      }
}

TEST_CASE("Verlinde paths equal brute-force admissible chains") {
  for (int k = 1; k <= 3; ++k)
    for (int l = 0; l <= k; ++l)
      for (int N = 1; N <= 4; ++N) {
        long brute = 0;
        for_each_vector(N - 1, k, [&](const std::vector<int>& alpha_tail) {
          for_each_vector(N - 1, k, [&](const std::vector<int>& beta) {
            std::vector<int> alpha{l};
            alpha.insert(alpha.end(), alpha_tail.begin(), alpha_tail.end());
            bool ok = true;
            for (int i = 0; i + 1 < N; ++i) ok = ok && is_admissible(alpha[i], beta[i], alpha[i + 1], k);
            if (ok) {
              ++brute;
              CHECK(validate_vpath(VPath{k, l, N, alpha, beta}).ok);
            }
          });
        });
        CHECK(static_cast<long>(enumerate_vpaths(k, l, N).size()) == brute);
      }
}

TEST_CASE("validators reject broken paths") {
  CHECK_FALSE(validate_cpath(CPath{1, 0, 2, {1, 0}, {0}}).ok);  // a_0 > l
  CHECK_FALSE(validate_vpath(VPath{1, 0, 2, {1, 0}, {1}}).ok);  // alpha_1 != l
  CHECK_FALSE(validate_vpath(VPath{1, 1, 2, {1, 1}, {1}}).ok);  // parity
}

TEST_CASE("bijection round trip and grading preservation") {
  for (int k = 1; k <= 3; ++k)
    for (int l = 0; l <= k; ++l)
      for (int N = 1; N <= 4; ++N) {
        std::set<CPath> images;
        for (const auto& p : enumerate_vpaths(k, l, N)) {
          const CPath c = bijection_iota(p);
          CHECK(validate_cpath(c).ok);
          CHECK(bijection_iota_inverse(c) == p);
          CHECK(gradings(c) == gradings(p));
          images.insert(c);
        }
        CHECK(images.size() == enumerate_cpaths(k, l, N).size());
      }
  CHECK_THROWS_AS(bijection_iota_inverse(CPath{1, 0, 2, {1, 0}, {0}}), std::invalid_argument);
}

TEST_CASE("concatenation lands in the longer path set and peels back") {
  for (int k = 1; k <= 3; ++k)
    for (int l = 0; l <= k; ++l)
      for (int N = 1; N <= 4; ++N) {
        CHECK(recursion_partition_check(k, l, N));
        for (const auto& p : enumerate_cpaths(k, l, N)) {
          if (N < 2) continue;
          const auto pe = peel_cpath(p);
          REQUIRE(pe);
          CHECK(cpath_concat(l, pe->lpp, pe->lp, pe->rest) == p);
        }
      }
}

TEST_CASE("multiplication of paths adds levels") {
  for (int N = 1; N <= 4; ++N)
    for (const auto& p1 : enumerate_vpaths(1, 1, N))
      for (const auto& p2 : enumerate_vpaths(2, 1, N)) {
        const VPath m = multiply_vpaths(p1, p2);
        CHECK(m.k == 3);
        CHECK(validate_vpath(m).ok);
        const CPath mc = multiply_cpaths(bijection_iota(p1), bijection_iota(p2));
        CHECK(validate_cpath(mc).ok);
      }
}

TEST_CASE("counts match Verlinde numbers") {
  for (int k = 1; k <= 3; ++k)
    for (int N = 1; N <= 5; ++N) {
      const auto t = verlinde_numbers(k, N);
      for (int l = 0; l <= k; ++l) {
        CHECK(mpz_class(static_cast<long>(enumerate_cpaths(k, l, N).size())) == t.values[l]);
        CHECK(mpz_class(static_cast<long>(enumerate_vpaths(k, l, N).size())) == t.values[l]);
      }
    }
}
