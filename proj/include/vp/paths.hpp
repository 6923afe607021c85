#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vp/verlinde.hpp"

namespace vp {

// Element of C^(N)_{k,l}: a = (a_0..a_{N-1}), b = (b_1..b_{N-1}).
// Boundary values (b_{-1}=l, b_0=0, b_inf=k, zeros beyond N) are applied by accessors.
struct CPath {
  int k = 1, l = 0, N = 0;
  std::vector<int> a, b;

  int a_at(int i) const;  // 0 outside 0..N-1
  int b_at(int i) const;  // l at -1, 0 at 0 and for i >= N
  int a0() const { return a_at(0); }
  bool operator==(const CPath&) const = default;
  auto operator<=>(const CPath&) const = default;
};

// Element of P^N_{k,l}: alpha = (alpha_1..alpha_N), beta = (beta_1..beta_{N-1}).
struct VPath {
  int k = 1, l = 0, N = 0;
  std::vector<int> alpha, beta;

  int alpha_at(int i) const;  // 1-based; 0 for i > N
  int beta_at(int i) const;   // 1-based; beta_N = alpha_N, 0 beyond
  bool operator==(const VPath&) const = default;
  auto operator<=>(const VPath&) const = default;
};

struct Grading {
  long e = 0, s1 = 0, s2 = 0;
  bool operator==(const Grading&) const = default;
};

struct Validation {
  bool ok = true;
  std::vector<std::string> violations;
};

Validation validate_cpath(const CPath& p);
Validation validate_vpath(const VPath& p);

std::vector<CPath> enumerate_cpaths(int k, int l, int N);
std::vector<VPath> enumerate_vpaths(int k, int l, int N);

CPath bijection_iota(const VPath& p);
// Throws std::invalid_argument if p is not a valid combinatorial path.
VPath bijection_iota_inverse(const CPath& p);

Grading gradings(const CPath& p);
Grading gradings(const VPath& p);

// c_C(l, l'', l'): C^(N)_{k,l'} -> C^(N+1)_{k,l}.
CPath cpath_concat(int l, int lpp, int lp, const CPath& p);
// c_P(l, l'', l'): prepends (l; l'').
VPath vpath_concat(int l, int lpp, int lp, const VPath& p);

// Splits p in C^(N)_{k,l}, N >= 1, as c_C(l, l'', l')(rest); nullopt for N == 1
// unless it is the trivial base case.
struct Peeled {
  int lpp, lp;
  CPath rest;
};
std::optional<Peeled> peel_cpath(const CPath& p);

VPath reverse_vpath(const VPath& p);

CPath multiply_cpaths(const CPath& p1, const CPath& p2);
VPath multiply_vpaths(const VPath& p1, const VPath& p2);

// Level-1 decomposition of c_C(l, l'', l')(p): k level-1 paths and k level-1 triples
// with sum_j c_C(t_j)(paths_j) == c_C(l, l'', l')(p).
struct Triple {
  int l, lpp, lp;
  bool operator==(const Triple&) const = default;
  auto operator<=>(const Triple&) const = default;
};
struct Level1Decomposition {
  std::vector<CPath> paths;
  std::vector<Triple> triples;
};
Level1Decomposition level1_decompose(const CPath& p, int l, int lpp, int lp);

// Matches level-1 triples to level-1 boundary pairs (l'_j, a0_j) as in the proof
// of surjectivity of m_C; returns for each path index the triple assigned to it.
std::vector<Triple> match_level1_triples(int k, int l, int lpp, int lp, const std::vector<CPath>& level1_paths);

// Exact disjoint-union checks of the concatenation recursion for C^(N+1)_{k,l}.
bool recursion_partition_check(int k, int l, int N);

}  // namespace vp
