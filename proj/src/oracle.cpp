#include "vp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vp {

ModuleSpec ModuleSpec::clamped() const {
  ModuleSpec r = *this;
  r.barred = false;
  r.l1 = std::min(l1, k);
  r.l2 = std::min(l2, k);
  r.l3 = std::min({r.l1, r.l2, std::min(eff_l3(), k)});
  return r;
}

std::string ModuleSpec::name() const {
  std::ostringstream os;
  os << (family == Family::W ? "W" : family == Family::V ? "V" : family == Family::U ? "U" : "H");
  if (barred) os << "bar";
  os << "_" << k << "[" << l1 << "," << l2;
  if (!barred) os << "," << l3;
  os << "]";
  if (!extra.empty()) os << "+" << extra.size() << "rel";
  return os.str();
}

namespace {

// Non-decreasing sequences of given size, entries >= lo, with the given sum.
void multisets(int size, int lo, int sum, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& cb) {
  if (size == 0) {
    if (sum == 0) cb(cur);
    return;
  }
  for (int x = lo; static_cast<long>(x) * size <= sum; ++x) {
    cur.push_back(x);
    multisets(size - 1, x, sum - x, cur, cb);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> multisets(int size, int lo, int sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (size < 0) return out;
  multisets(size, lo, sum, cur, [&](const std::vector<int>& v) { out.push_back(v); });
  return out;
}

mpz_class multinomial(const std::vector<int>& v) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), v.size());
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), j - i);
    r /= f;
    i = j;
  }
  return r;
}

Vec single(Mono m) {
  Vec v;
  v.emplace(std::move(m), 1);
  return v;
}

Vec power_vec(Gen g, int p) {
  Mono m;
  auto& blk = g.type == GenType::H ? m.h : g.type == GenType::E ? m.e : m.f;
  for (int i = 0; i < p; ++i) blk.push_back(g.idx);
  return single(std::move(m));  // p <= 0 gives v itself: the zero module
}

}  // namespace

std::vector<Mono> monomials_of_weight(Family fam, Weight w) {
  std::vector<Mono> out;
  if (w.m < 0 || w.n < 0) return out;
  const Thresholds th = thresholds(fam);
  for (int t = 0; t <= std::min(w.m, w.n); ++t) {
    const int ne = w.m - t, nf = w.n - t, nh = t;
    const long min_h = static_cast<long>(nh) * th.h_min, min_e = static_cast<long>(ne) * th.e_min,
               min_f = static_cast<long>(nf) * th.f_min;
    for (long dh = min_h; dh + min_e + min_f <= w.d; ++dh) {
      auto hs = multisets(nh, th.h_min, static_cast<int>(dh));
      if (hs.empty()) continue;
      for (long de = min_e; dh + de + min_f <= w.d; ++de) {
        auto es = multisets(ne, th.e_min, static_cast<int>(de));
        if (es.empty()) continue;
        auto fs = multisets(nf, th.f_min, static_cast<int>(w.d - dh - de));
        for (const auto& h : hs)
          for (const auto& e : es)
            for (const auto& f : fs) out.push_back(Mono{h, e, f});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mono> WeightSpace::basis() const {
  std::vector<Mono> b;
  for (int c : rel.non_pivot_columns()) b.push_back(cols[c]);
  return b;
}

ModuleOracle::ModuleOracle(ModuleSpec spec, int aux_cap) : spec_(std::move(spec)), aux_cap_(aux_cap) {
  build_boundary_closure();
}

SparseQRow ModuleOracle::to_row(const Vec& v, const WeightSpace& ws) const {
  SparseQRow r;
  for (const auto& [m, c] : v) {
    auto it = ws.index.find(m);
    if (it == ws.index.end()) throw std::logic_error("monomial outside weight space: " + to_string(m));
    r.emplace_back(it->second, mpq_class(c));
  }
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

void ModuleOracle::build_boundary_closure() {
  const Family fam = spec_.family;
  const Thresholds th = thresholds(fam);
  std::vector<Vec> seeds;
  switch (fam) {
    case Family::W:
      seeds = {power_vec(E(1), spec_.l1 + 1), power_vec(F(1), spec_.l2 + 1), power_vec(H(1), spec_.eff_l3() + 1)};
      break;
    case Family::V:
      seeds = {power_vec(E(1), spec_.l1 + 1), power_vec(F(0), spec_.l2 + 1), power_vec(H(0), spec_.eff_l3() + 1)};
      break;
    case Family::U:
      seeds = {power_vec(E(0), spec_.l1 + 1), power_vec(F(1), spec_.l2 + 1), power_vec(H(0), spec_.eff_l3() + 1)};
      break;
    case Family::Free: break;
  }
  for (const auto& w : spec_.extra) seeds.push_back(normal_order(w, fam));

  struct Local {
    std::unordered_map<Mono, int> index;
    Echelon ech;
  };
  std::map<Weight, Local> seen;
  std::vector<Vec> queue;
  auto offer = [&](const Vec& v) {
    if (v.empty()) return;
    Weight w = v.begin()->first.weight();
    auto it = seen.find(w);
    if (it == seen.end()) {
      Local loc;
      auto cols = monomials_of_weight(fam, w);
      for (std::size_t i = 0; i < cols.size(); ++i) loc.index.emplace(cols[i], static_cast<int>(i));
      loc.ech = Echelon(static_cast<int>(cols.size()));
      it = seen.emplace(w, std::move(loc)).first;
    }
    SparseQRow r;
    for (const auto& [m, c] : v) r.emplace_back(it->second.index.at(m), mpq_class(c));
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it->second.ech.add(r)) {
      boundary_[w].push_back(v);
      queue.push_back(v);
    }
  };
  for (const auto& s : seeds) offer(s);
  while (!queue.empty()) {
    Vec u = std::move(queue.back());
    queue.pop_back();
    int maxe = INT_MIN, maxf = INT_MIN;
    for (const auto& [m, c] : u) {
      if (!m.e.empty()) maxe = std::max(maxe, m.e.back());
      if (!m.f.empty()) maxf = std::max(maxf, m.f.back());
    }
    if (maxf != INT_MIN)
      for (int i = th.h_min - maxf; i < th.e_min; ++i) offer(apply_gen(E(i), u, fam));
    if (maxe != INT_MIN)
      for (int j = th.h_min - maxe; j < th.f_min; ++j) offer(apply_gen(F(j), u, fam));
  }
}

std::vector<Vec> ModuleOracle::integrability_generators(Weight w) const {
  std::vector<Vec> out;
  const int k = spec_.k;
  const Thresholds th = thresholds(spec_.family);
  auto build = [&](bool e_type, int a) {
    const int p = k + 1 - a;
    if (p < 0) return;
    const int lo = e_type ? th.e_min : th.f_min;
    Vec v;
    for (long dx = static_cast<long>(p) * lo; dx + static_cast<long>(a) * th.h_min <= w.d; ++dx) {
      auto xs = multisets(p, lo, static_cast<int>(dx));
      auto hs = multisets(a, th.h_min, static_cast<int>(w.d - dx));
      for (const auto& x : xs) {
        mpz_class cx = multinomial(x);
        for (const auto& h : hs) {
          Mono m;
          m.h = h;
          (e_type ? m.e : m.f) = x;
          v[m] += cx * multinomial(h);
        }
      }
    }
    if (!v.empty()) out.push_back(std::move(v));
  };
  if (w.m == k + 1 && w.n <= k + 1) build(true, w.n);
  if (w.n == k + 1 && w.m <= k + 1 && !(w.m == k + 1)) build(false, w.m);
  return out;
}

const WeightSpace& ModuleOracle::space(Weight w) {
  if (auto it = spaces_.find(w); it != spaces_.end()) return *it->second;
  auto ws = std::make_unique<WeightSpace>();
  ws->w = w;
  ws->cols = monomials_of_weight(spec_.family, w);
  for (std::size_t i = 0; i < ws->cols.size(); ++i) ws->index.emplace(ws->cols[i], static_cast<int>(i));
  ws->rel = Echelon(static_cast<int>(ws->cols.size()));
  const int ncols = static_cast<int>(ws->cols.size());
  auto full = [&] { return ws->rel.rank() == ncols; };

  if (ncols > 0 && within_cap(w.d)) {
    for (const auto& g : integrability_generators(w)) ws->rel.add(to_row(g, *ws));
    if (auto it = boundary_.find(w); it != boundary_.end())
      for (const auto& g : it->second) ws->rel.add(to_row(g, *ws));
  }
  if (ncols > 0) {
    const Thresholds th = thresholds(spec_.family);
    for (GenType t : {GenType::H, GenType::E, GenType::F}) {
      if (full()) break;
      for (int idx = th.min_of(t); idx <= w.d && !full(); ++idx) {
        Gen x{t, idx};
        Weight lw = w - weight_of(x);
        if (!lw.nonneg() || lw.d < 0) continue;
        const WeightSpace& lower = space(lw);
        for (const auto& row : lower.rel.rows()) {
          if (full()) break;
          Vec v;
          for (const auto& [c, val] : row) v.emplace(lower.cols[c], val);
          Vec img = apply_gen(x, v, spec_.family);
          if (!img.empty()) ws->rel.add(to_row(img, *ws));
        }
      }
    }
  }
  auto [it, ins] = spaces_.emplace(w, std::move(ws));
  return *it->second;
}

bool ModuleOracle::is_zero(const Vec& v, Weight w) {
  if (v.empty()) return true;
  const WeightSpace& ws = space(w);
  return ws.rel.in_span(to_row(v, ws));
}

std::shared_ptr<ModuleOracle> module_oracle(const ModuleSpec& spec, int aux_cap) {
  static std::map<std::pair<ModuleSpec, int>, std::shared_ptr<ModuleOracle>> registry;
  auto key = std::make_pair(spec, aux_cap);
  auto it = registry.find(key);
  if (it == registry.end()) it = registry.emplace(key, std::make_shared<ModuleOracle>(spec, aux_cap)).first;
  return it->second;
}

bool cutoff_zeroes(const CoinvariantSpec& cs, Weight w) {
  if (!cs.cutoff || cs.module.family != Family::W) return false;
  const ModuleSpec c = cs.module.clamped();
  if (cs.M == 0 && w.n - 2 * w.m < c.k - c.l1) return true;
  if (cs.N == 0 && w.m - 2 * w.n < c.k - c.l2) return true;
  return false;
}

LaurentPoly3 CoinvariantTable::character() const {
  LaurentPoly3 p;
  for (const auto& e : entries) p.add_term({e.w.d, e.w.m, e.w.n}, e.dim);
  return p;
}

int CoinvariantTable::dim_at(Weight w) const {
  for (const auto& e : entries)
    if (e.w == w) return e.dim;
  return 0;
}

CoinvariantOracle::CoinvariantOracle(CoinvariantSpec spec)
    : spec_(std::move(spec)), mod_(module_oracle(spec_.module, spec_.aux_cap)) {}

bool CoinvariantOracle::is_small(const Mono& m) const {
  for (int x : m.e)
    if (x >= spec_.M) return false;
  for (int x : m.f)
    if (x >= spec_.N) return false;
  for (int x : m.h)
    if (x >= spec_.M + spec_.N) return false;
  return true;
}

namespace {
// Larger multisets (compared from the top index down) come first.
int cmp_desc(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = a.size(), j = b.size();
  while (i > 0 && j > 0) {
    --i;
    --j;
    if (a[i] != b[j]) return a[i] > b[j] ? -1 : 1;
  }
  if (i == j) return 0;
  return i > 0 ? -1 : 1;
}
}  // namespace

const CoinvariantWeight& CoinvariantOracle::at(Weight w) {
  if (auto it = cache_.find(w); it != cache_.end()) return *it->second;
  auto cw = std::make_unique<CoinvariantWeight>();
  cw->w = w;
  cw->cut = cutoff_zeroes(spec_, w);
  const WeightSpace& ws = mod_->space(w);
  cw->cols = ws.cols;
  // Pivot priority: monomials outside the small range first, then larger h, e, f blocks.
  std::sort(cw->cols.begin(), cw->cols.end(), [&](const Mono& a, const Mono& b) {
    bool sa = is_small(a), sb = is_small(b);
    if (sa != sb) return !sa;
    if (int c = cmp_desc(a.h, b.h)) return c < 0;
    if (int c = cmp_desc(a.e, b.e)) return c < 0;
    return cmp_desc(a.f, b.f) < 0;
  });
  for (std::size_t i = 0; i < cw->cols.size(); ++i) cw->index.emplace(cw->cols[i], static_cast<int>(i));
  const int ncols = static_cast<int>(cw->cols.size());
  cw->rel = Echelon(ncols);
  if (!cw->cut && ncols > 0) {
    auto to_row = [&](const Vec& v) {
      SparseQRow r;
      for (const auto& [m, c] : v) r.emplace_back(cw->index.at(m), mpq_class(c));
      std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      return r;
    };
    auto full = [&] { return cw->rel.rank() == ncols; };
    for (const auto& row : ws.rel.rows()) {
      SparseQRow r;
      for (const auto& [c, val] : row) r.emplace_back(cw->index.at(ws.cols[c]), mpq_class(val));
      std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      cw->rel.add(r);
    }
    auto act = [&](Gen g) {
      Weight lw = w - weight_of(g);
      if (!lw.nonneg() || lw.d < 0 || full()) return;
      const WeightSpace& lower = mod_->space(lw);
      for (const auto& u : lower.basis()) {
        if (full()) return;
        Vec img = apply_gen(g, single(u), spec_.module.family);
        if (!img.empty()) cw->rel.add(to_row(img));
      }
    };
    for (int i = spec_.M; i <= w.d; ++i) act(E(i));
    for (int j = spec_.N; j <= w.d; ++j) act(F(j));
    for (int i = spec_.M + spec_.N; i <= w.d; ++i) act(H(i));
    for (int c : cw->rel.non_pivot_columns()) cw->basis.push_back(cw->cols[c]);
  }
  auto [it, ins] = cache_.emplace(w, std::move(cw));
  return *it->second;
}

std::vector<mpq_class> CoinvariantOracle::coordinates(const Vec& v, Weight w) {
  const CoinvariantWeight& cw = at(w);
  std::vector<mpq_class> out(cw.basis.size());
  if (cw.cut || v.empty()) return out;
  SparseQRow r;
  for (const auto& [m, c] : v) r.emplace_back(cw.index.at(m), mpq_class(c));
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseQRow nf = cw.rel.reduce(r);
  std::unordered_map<int, std::size_t> pos;
  for (std::size_t i = 0; i < cw.basis.size(); ++i) pos.emplace(cw.index.at(cw.basis[i]), i);
  for (auto& [c, val] : nf) out[pos.at(c)] = val;
  return out;
}

std::vector<Weight> CoinvariantOracle::window(int cap) const {
  // Per index i the small generators e_i, f_i, h_i obey exp(e_i) + exp(h_i) <= cap and
  // exp(f_i) + exp(h_i) <= cap, the leading-term shape of e(z)^p h(z)^a = f(z)^p h(z)^a = 0.
  const Thresholds th = thresholds(spec_.module.family);
  const int lo = std::min({th.e_min, th.f_min, th.h_min});
  const int hi = spec_.M + spec_.N;  // exclusive
  std::set<Weight> ws{Weight{}};
  for (int i = lo; i < hi; ++i) {
    const bool has_e = i >= th.e_min && i < spec_.M, has_f = i >= th.f_min && i < spec_.N,
               has_h = i >= th.h_min && i < spec_.M + spec_.N;
    std::set<Weight> next;
    for (int xh = 0; xh <= (has_h ? cap : 0); ++xh)
      for (int xe = 0; xe + xh <= (has_e ? cap : xh); ++xe)
        for (int xf = 0; xf + xh <= (has_f ? cap : xh); ++xf) {
          const Weight step{xe + xh, xf + xh, i * (xe + xf + xh)};
          for (const auto& w : ws) next.insert(w + step);
        }
    ws.swap(next);
  }
  return {ws.begin(), ws.end()};
}

std::vector<Weight> CoinvariantOracle::shell(int cap) const {
  const Thresholds th = thresholds(spec_.module.family);
  std::vector<Weight> steps;
  for (int i = th.e_min; i < spec_.M; ++i) steps.push_back(weight_of(E(i)));
  for (int j = th.f_min; j < spec_.N; ++j) steps.push_back(weight_of(F(j)));
  for (int i = th.h_min; i < spec_.M + spec_.N; ++i) steps.push_back(weight_of(H(i)));
  const auto inner = window(cap);
  const std::set<Weight> inner_set(inner.begin(), inner.end());
  std::set<Weight> out;
  for (const auto& w : inner)
    for (const auto& s : steps)
      if (!inner_set.count(w + s)) out.insert(w + s);
  return {out.begin(), out.end()};
}

CoinvariantTable CoinvariantOracle::table() {
  CoinvariantTable t;
  t.spec = spec_;
  const int cap = spec_.exp_cap < 0 ? std::max(spec_.module.k, 1) : spec_.exp_cap;
  const auto inner = window(cap);
  int dmax = 0;
  for (const auto& w : inner) dmax = std::max(dmax, w.d);
  const int d_cap = spec_.d_cap < 0 ? dmax : spec_.d_cap;
  t.spec.d_cap = d_cap;
  int max_computed = 0;
  for (const auto& w : inner) {
    if (w.d > d_cap) continue;
    int dim = 0;
    if (!cutoff_zeroes(spec_, w)) {
      const auto& cw = at(w);
      dim = cw.dim();
      max_computed = std::max(max_computed, w.d);
      if (dim > 0) t.entries.push_back({w, dim, cw.basis});
    }
    t.total_dim += dim;
    t.max_d = std::max(t.max_d, dim > 0 ? w.d : 0);
  }
  // Shell: one small generator beyond the window; when d_cap is user-imposed only weights up to it are checked.
  for (const auto& w : shell(cap)) {
    if (spec_.d_cap >= 0 && w.d > spec_.d_cap) continue;
    ++t.shell_weights;
    if (cutoff_zeroes(spec_, w)) continue;
    max_computed = std::max(max_computed, w.d);
    if (at(w).dim() > 0) ++t.shell_nonzero;
  }
  t.relations_complete = spec_.aux_cap == kUnbounded || spec_.aux_cap >= max_computed;
  t.stabilized = t.relations_complete && t.shell_nonzero == 0;
  return t;
}

CoinvariantTable coinvariant_dims(const CoinvariantSpec& cs) { return CoinvariantOracle(cs).table(); }

CoinvariantTable stabilized_table(const CoinvariantSpec& cs) {
  auto t = coinvariant_dims(cs);
  if (!t.stabilized) throw NotStabilized("coinvariants of " + cs.module.name() + " not stabilized");
  return t;
}

}  // namespace vp
