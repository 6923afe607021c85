#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace vp {

struct XYZ {
  int x, y, z;
  bool operator==(const XYZ&) const = default;
};

// x = (a+g-b)/2, y = (a+b-g)/2, z = (b+g-a)/2; nullopt unless all are
// non-negative integers with x+y+z <= k and 0 <= a,b,g <= k.
std::optional<XYZ> xyz_decompose(int alpha, int beta, int gamma, int k);
bool is_admissible(int alpha, int beta, int gamma, int k);

// Element of the level-k fusion ring in the basis pi_0..pi_k.
struct FusionElement {
  int k = 1;
  std::vector<mpz_class> coeffs;  // size k+1

  static FusionElement basis(int k, int l);
  static FusionElement zero(int k);
  bool operator==(const FusionElement& o) const { return k == o.k && coeffs == o.coeffs; }
};

FusionElement fusion_product(const FusionElement& u, const FusionElement& v);

// d^(N)_{k,l} for l = 0..k: coefficients of (pi_0 + ... + pi_k)^N.
struct VerlindeNumberTable {
  int k = 1, N = 0;
  std::vector<mpz_class> values;
};

VerlindeNumberTable verlinde_numbers(int k, int N);

// d^(N)_{k,l} == sum over admissible (l, l'', l') of d^(N-1)_{k,l'}.
bool verlinde_recursion_check(int k, int l, int N);

}  // namespace vp
