#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vp/heisenberg.hpp"
#include "vp/laurent.hpp"
#include "vp/linalg.hpp"

namespace vp {

// aux_cap value meaning "no cap": every relation generator is used.
inline constexpr int kUnbounded = -1;

// Presentation of a highest weight module of the Heisenberg algebra.
struct ModuleSpec {
  Family family = Family::W;
  bool barred = false;  // forces l3 = min(l1, l2)
  int k = 1;
  int l1 = 0, l2 = 0, l3 = 0;
  // Extra relations word*v = 0, used to encode extra hypotheses.
  std::vector<std::vector<Gen>> extra;

  int eff_l3() const { return barred ? std::min(l1, l2) : l3; }
  bool is_zero() const { return l1 < 0 || l2 < 0 || eff_l3() < 0; }
  // l_i -> min(l_i, k), l3 -> min(l1, l2, l3); unbarred in the result.
  ModuleSpec clamped() const;
  std::string name() const;

  bool operator==(const ModuleSpec&) const = default;
  auto operator<=>(const ModuleSpec&) const = default;

  static ModuleSpec W3(int k, int l1, int l2, int l3) { return {Family::W, false, k, l1, l2, l3, {}}; }
  static ModuleSpec V3(int k, int l1, int l2, int l3) { return {Family::V, false, k, l1, l2, l3, {}}; }
  static ModuleSpec U3(int k, int l1, int l2, int l3) { return {Family::U, false, k, l1, l2, l3, {}}; }
  // W_k[l1,l2] = W_k[l1,l2,l1+l2-k]; V_k[l1,l2] = V_k[l1,l2,0]; U_k[l1,l2] = U_k[l1,l2,0].
  static ModuleSpec W2(int k, int l1, int l2) { return W3(k, l1, l2, l1 + l2 - k); }
  static ModuleSpec V2(int k, int l1, int l2) { return V3(k, l1, l2, 0); }
  static ModuleSpec U2(int k, int l1, int l2) { return U3(k, l1, l2, 0); }
  static ModuleSpec Wbar(int k, int l1, int l2) { return {Family::W, true, k, l1, l2, 0, {}}; }
  static ModuleSpec Vbar(int k, int l1, int l2) { return {Family::V, true, k, l1, l2, 0, {}}; }
  static ModuleSpec Ubar(int k, int l1, int l2) { return {Family::U, true, k, l1, l2, 0, {}}; }
};

// Monomials of weight w whose indices respect the family's creation ranges.
std::vector<Mono> monomials_of_weight(Family fam, Weight w);

// Weight space of the module: span of monomials modulo the relation submodule.
struct WeightSpace {
  Weight w;
  std::vector<Mono> cols;  // canonical (sorted) order
  std::unordered_map<Mono, int> index;
  Echelon rel;             // relation submodule at this weight
  int dim() const { return static_cast<int>(cols.size()) - rel.rank(); }
  std::vector<Mono> basis() const;  // pivot complement
};

// Exact weight spaces of a module. The relation submodule is generated by the
// integrability generators (coefficients of e(z)^p h(z)^a v and f(z)^p h(z)^a v,
// p + a = k + 1) and the closure of the boundary relations under the
// annihilating subalgebra; both sets are stable under that subalgebra, so the
// submodule is obtained by acting with creation operators only.
class ModuleOracle {
public:
  ModuleOracle(ModuleSpec spec, int aux_cap = kUnbounded);

  const ModuleSpec& spec() const { return spec_; }
  int aux_cap() const { return aux_cap_; }
  const WeightSpace& space(Weight w);
  int dim(Weight w) { return space(w).dim(); }
  // v must be homogeneous of weight w.
  bool is_zero(const Vec& v, Weight w);
  SparseQRow to_row(const Vec& v, const WeightSpace& ws) const;

private:
  bool within_cap(int d) const { return aux_cap_ == kUnbounded || d <= aux_cap_; }
  void build_boundary_closure();
  std::vector<Vec> integrability_generators(Weight w) const;

  ModuleSpec spec_;
  int aux_cap_;
  std::map<Weight, std::unique_ptr<WeightSpace>> spaces_;
  std::map<Weight, std::vector<Vec>> boundary_;
};

// Shared oracle per (spec, aux_cap); not thread-safe.
std::shared_ptr<ModuleOracle> module_oracle(const ModuleSpec& spec, int aux_cap = kUnbounded);

struct CoinvariantSpec {
  ModuleSpec module;
  int M = 0, N = 0;
  int d_cap = -1;    // -1: derived from the weight window
  int aux_cap = kUnbounded;
  bool cutoff = true;  // the M=0 / N=0 zeroing rule; applied to the W family only
  int exp_cap = -1;  // -1: k; per-generator exponent bound of the weight window
};

// Whether the cutoff rule zeroes weight w of the coinvariant.
bool cutoff_zeroes(const CoinvariantSpec& cs, Weight w);

struct CoinvariantWeight {
  Weight w;
  std::vector<Mono> cols;  // coinvariant column order: non-small monomials first
  std::unordered_map<Mono, int> index;
  Echelon rel;
  bool cut = false;
  std::vector<Mono> basis;  // pivot complement (empty when cut)
  int dim() const { return cut ? 0 : static_cast<int>(basis.size()); }
};

struct CoinvariantEntry {
  Weight w;
  int dim = 0;
  std::vector<Mono> basis;
};

struct CoinvariantTable {
  CoinvariantSpec spec;
  std::vector<CoinvariantEntry> entries;  // nonzero weights, sorted
  int total_dim = 0;
  int max_d = 0;
  int shell_weights = 0;    // weights one small generator beyond the window
  int shell_nonzero = 0;    // of which nonzero (must be 0 when stabilized)
  bool relations_complete = true;  // aux_cap covered every computed degree
  bool stabilized = false;
  LaurentPoly3 character() const;
  int dim_at(Weight w) const;
};

class CoinvariantOracle {
public:
  explicit CoinvariantOracle(CoinvariantSpec spec);
  const CoinvariantSpec& spec() const { return spec_; }
  const CoinvariantWeight& at(Weight w);
  // Coordinates of v (homogeneous of weight w) in the basis of at(w).
  std::vector<mpq_class> coordinates(const Vec& v, Weight w);
  bool is_small(const Mono& m) const;
  // Weights of small monomials with exp(e_i)+exp(h_i) <= cap and exp(f_i)+exp(h_i) <= cap per index.
  std::vector<Weight> window(int cap) const;
  // Weights one small generator beyond window(cap).
  std::vector<Weight> shell(int cap) const;
  CoinvariantTable table();

private:
  CoinvariantSpec spec_;
  std::shared_ptr<ModuleOracle> mod_;
  std::map<Weight, std::unique_ptr<CoinvariantWeight>> cache_;
};

CoinvariantTable coinvariant_dims(const CoinvariantSpec& cs);

// Total dimension and character of a coinvariant, throwing NotStabilized
// (carrying the table) when the window check fails.
struct NotStabilized : std::runtime_error {
  explicit NotStabilized(const std::string& what) : std::runtime_error(what) {}
};
CoinvariantTable stabilized_table(const CoinvariantSpec& cs);

}  // namespace vp
