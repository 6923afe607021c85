#include <cmath>

#include "doctest.h"
#include "vp/verlinde.hpp"

using namespace vp;

namespace {

// d^(N)_{k,l} from the modular S-matrix of level k.
long s_matrix_count(int k, int l, int N) {
  const double pi = std::acos(-1.0);
  auto S = [&](int a, int b) { return std::sqrt(2.0 / (k + 2)) * std::sin(pi * (a + 1) * (b + 1) / (k + 2)); };
  double sum = 0;
  for (int s = 0; s <= k; ++s) {
    double eig = 0;
    for (int a = 0; a <= k; ++a) eig += S(a, s) / S(0, s);
    sum += S(0, s) * std::pow(eig, N) * S(l, s);
  }
  return std::lround(sum);
}

}  // namespace

TEST_CASE("admissible triples") {
  CHECK(is_admissible(1, 1, 0, 1));
  CHECK_FALSE(is_admissible(1, 0, 0, 1));  // parity
  CHECK_FALSE(is_admissible(2, 2, 2, 2));  // x+y+z = 3 > k
  CHECK(is_admissible(2, 2, 2, 3));
  const auto d = xyz_decompose(2, 2, 2, 3);
  REQUIRE(d);
  CHECK(*d == XYZ{1, 1, 1});
}

TEST_CASE("admissibility is symmetric under permutations") {
  for (int k = 1; k <= 4; ++k)
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int g = 0; g <= k; ++g) {
          const bool x = is_admissible(a, b, g, k);
          CHECK(x == is_admissible(b, g, a, k));
          CHECK(x == is_admissible(g, a, b, k));
          CHECK(x == is_admissible(b, a, g, k));
        }
}

TEST_CASE("small tables") {
  auto t = verlinde_numbers(1, 4);
  CHECK(t.values == std::vector<mpz_class>{8, 8});
  t = verlinde_numbers(2, 1);
  CHECK(t.values == std::vector<mpz_class>{1, 1, 1});
  t = verlinde_numbers(2, 2);
  CHECK(t.values == std::vector<mpz_class>{3, 4, 3});
}

TEST_CASE("Verlinde numbers agree with the S-matrix formula") {
  for (int k = 1; k <= 4; ++k)
    for (int N = 0; N <= 7; ++N) {
      const auto t = verlinde_numbers(k, N);
      for (int l = 0; l <= k; ++l) CHECK(t.values[l] == s_matrix_count(k, l, N));
    }
}

TEST_CASE("fusion ring is commutative and associative") {
  for (int k = 1; k <= 3; ++k)
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b) {
        const auto A = FusionElement::basis(k, a), B = FusionElement::basis(k, b);
        CHECK(fusion_product(A, B) == fusion_product(B, A));
        for (int c = 0; c <= k; ++c) {
          const auto C = FusionElement::basis(k, c);
          CHECK(fusion_product(fusion_product(A, B), C) == fusion_product(A, fusion_product(B, C)));
        }
      }
}

TEST_CASE("quantum dimensions are a character of the fusion ring") {
  // sum_l qdim(l) d^(N)_{k,l} = (sum_a qdim(a))^N.
  const double pi = std::acos(-1.0);
  for (int k = 1; k <= 3; ++k) {
    auto qdim = [&](int a) { return std::sin(pi * (a + 1) / (k + 2)) / std::sin(pi / (k + 2)); };
    double base = 0;
    for (int a = 0; a <= k; ++a) base += qdim(a);
    for (int N = 1; N <= 6; ++N) {
      const auto t = verlinde_numbers(k, N);
      double total = 0;
      for (int l = 0; l <= k; ++l) total += qdim(l) * t.values[l].get_d();
      CHECK(total == doctest::Approx(std::pow(base, N)).epsilon(1e-9));
      for (int l = 0; l <= k; ++l) CHECK(verlinde_recursion_check(k, l, N));
    }
  }
}
