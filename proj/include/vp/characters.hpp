#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vp/laurent.hpp"
#include "vp/paths.hpp"

namespace vp {

// Full character: sum over P^N_{k,l} of q^e z1^s1 z2^s2.
LaurentPoly3 char_full(int k, int l, int N);

// chi^N_{k,l}[*; i, j]: alpha_N = i and alpha_N + beta_{N-1} - alpha_{N-1} = 2j (N >= 2).
LaurentPoly3 partial_char_right(int k, int l, int N, int i, int j);
// chi^N_{k,l}[i; *]: alpha_1 + beta_1 - alpha_2 = 2i (N >= 1).
LaurentPoly3 partial_char_left(int k, int l, int N, int i);
// chi^N_k[i, l; i', l']: left end (i, alpha_1 = l), right end (i', alpha_N = l') (N >= 2).
LaurentPoly3 partial_char_both(int k, int N, int i, int l, int ip, int lp);

// Index labels of the transfer matrices: pairs (a, b) with 0 <= b <= a <= k,
// ordered lexicographically. For R a pair is (i, j); for L it is (l, i).
std::vector<std::pair<int, int>> transfer_labels(int k);

struct TransferMatrix {
  int k = 1;
  int N = 0;  // 0 for L
  char kind = 'R';
  std::vector<std::pair<int, int>> labels;
  std::vector<std::vector<LaurentPoly3>> entries;
};

TransferMatrix r_matrix(int k, int N);
// L_k in closed form: (q z1 z2)^{l'+i-l-(i'+i-l)^+} q^{i'} z2^i.
TransferMatrix l_matrix(int k);
// The matrix that actually implements left concatenation under z2 -> q z2:
// the closed-form entries divided by q^{i'} (column rescaling).
TransferMatrix l_matrix_recursive(int k);

bool verify_right_recursion(int k, int l, int N);
// Left recursion with l_matrix_recursive (closed_form = false) or l_matrix.
bool verify_left_recursion(int k, int l, int N, bool closed_form = false);
bool verify_conjugation_identity(int k, int N);

struct RankResult {
  int generic_rank = 0;
  int degenerate_rank = 0;
};

// Exact rank over Q at random rational points (generic) and at q = 1, z2 = 1/z1.
RankResult rank_at_specialization(const TransferMatrix& m, std::uint64_t seed, int trials = 3);

// Rank of a dense rational matrix.
int rational_rank(std::vector<std::vector<mpq_class>> rows);

}  // namespace vp
