#include "vp/verlinde.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace vp {

std::optional<XYZ> xyz_decompose(int alpha, int beta, int gamma, int k) {
  if (alpha < 0 || beta < 0 || gamma < 0 || alpha > k || beta > k || gamma > k) return std::nullopt;
  if ((alpha + beta + gamma) % 2 != 0) return std::nullopt;
  XYZ r{(alpha + gamma - beta) / 2, (alpha + beta - gamma) / 2, (beta + gamma - alpha) / 2};
  if (r.x < 0 || r.y < 0 || r.z < 0 || r.x + r.y + r.z > k) return std::nullopt;
  return r;
}

bool is_admissible(int alpha, int beta, int gamma, int k) {
  return xyz_decompose(alpha, beta, gamma, k).has_value();
}

FusionElement FusionElement::zero(int k) {
  if (k < 1) throw std::invalid_argument("level must be positive");
  return FusionElement{k, std::vector<mpz_class>(k + 1, 0)};
}

FusionElement FusionElement::basis(int k, int l) {
  auto r = zero(k);
  if (l < 0 || l > k) throw std::invalid_argument("weight out of range");
  r.coeffs[l] = 1;
  return r;
}

FusionElement fusion_product(const FusionElement& u, const FusionElement& v) {
  if (u.k != v.k) throw std::invalid_argument("level mismatch in fusion product");
  const int k = u.k;
  auto r = FusionElement::zero(k);
  for (int l = 0; l <= k; ++l) {
    if (u.coeffs[l] == 0) continue;
    for (int lp = 0; lp <= k; ++lp) {
      if (v.coeffs[lp] == 0) continue;
      mpz_class c = u.coeffs[l] * v.coeffs[lp];
      int hi = std::min(2 * k - l - lp, l + lp);
      for (int i = std::abs(l - lp); i <= hi; i += 2) r.coeffs[i] += c;
    }
  }
  return r;
}

VerlindeNumberTable verlinde_numbers(int k, int N) {
  if (k < 1 || N < 0) throw std::invalid_argument("need k >= 1 and N >= 0");
  auto sum = FusionElement::zero(k);
  for (auto& c : sum.coeffs) c = 1;
  auto acc = FusionElement::basis(k, 0);
  for (int s = 0; s < N; ++s) acc = fusion_product(acc, sum);
  return VerlindeNumberTable{k, N, acc.coeffs};
}

bool verlinde_recursion_check(int k, int l, int N) {
  if (N < 1 || l < 0 || l > k) return false;
  const auto cur = verlinde_numbers(k, N);
  const auto prev = verlinde_numbers(k, N - 1);
  mpz_class s = 0;
  for (int lpp = 0; lpp <= k; ++lpp)
    for (int lp = 0; lp <= k; ++lp)
      if (is_admissible(l, lpp, lp, k)) s += prev.values[lp];
  return s == cur.values[l];
}

}  // namespace vp
