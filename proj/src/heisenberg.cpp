#include "vp/heisenberg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace vp {

Weight weight_of(Gen g) {
  switch (g.type) {
    case GenType::E: return {1, 0, g.idx};
    case GenType::F: return {0, 1, g.idx};
    case GenType::H: return {1, 1, g.idx};
  }
  return {};
}

Weight Mono::weight() const {
  Weight w{static_cast<int>(e.size() + h.size()), static_cast<int>(f.size() + h.size()), 0};
  for (int x : h) w.d += x;
  for (int x : e) w.d += x;
  for (int x : f) w.d += x;
  return w;
}

namespace {
void render_block(std::ostringstream& os, char letter, const std::vector<int>& v, bool& any, bool compact) {
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (any && !compact) os << ' ';
    os << letter << (compact ? "" : "_") << v[i];
    if (j - i > 1) os << '^' << (j - i);
    any = true;
    i = j;
  }
}

void insert_sorted(std::vector<int>& v, int x) { v.insert(std::upper_bound(v.begin(), v.end(), x), x); }
}  // namespace

std::string to_string(const Mono& m) {
  std::ostringstream os;
  bool any = false;
  render_block(os, 'h', m.h, any, false);
  render_block(os, 'e', m.e, any, false);
  render_block(os, 'f', m.f, any, false);
  return any ? os.str() : "1";
}

std::string to_compact(const Mono& m) {
  std::ostringstream os;
  bool any = false;
  // Descending indices inside a block, matching how the tables print e.g. "f2h1".
  auto rev = [](std::vector<int> v) {
    std::reverse(v.begin(), v.end());
    return v;
  };
  render_block(os, 'e', rev(m.e), any, true);
  render_block(os, 'f', rev(m.f), any, true);
  render_block(os, 'h', rev(m.h), any, true);
  return any ? os.str() : "1";
}

Mono parse_compact(const std::string& s) {
  Mono m;
  if (s == "1") return m;
  std::size_t i = 0;
  while (i < s.size()) {
    char letter = s[i++];
    if (letter == '_' ) continue;
    std::size_t j = i;
    if (j < s.size() && s[j] == '_') ++j;
    std::size_t st = j;
    if (j < s.size() && s[j] == '-') ++j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (st == j) throw std::invalid_argument("bad monomial: " + s);
    int idx = std::stoi(s.substr(st, j - st));
    int pw = 1;
    if (j < s.size() && s[j] == '^') {
      std::size_t k = ++j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      pw = std::stoi(s.substr(k, j - k));
    }
    std::vector<int>* blk = letter == 'e' ? &m.e : letter == 'f' ? &m.f : letter == 'h' ? &m.h : nullptr;
    if (!blk) throw std::invalid_argument("bad generator in: " + s);
    for (int p = 0; p < pw; ++p) insert_sorted(*blk, idx);
    i = j;
    while (i < s.size() && s[i] == ' ') ++i;
  }
  return m;
}

std::string to_string(Gen g) {
  char c = g.type == GenType::E ? 'e' : g.type == GenType::F ? 'f' : 'h';
  return std::string(1, c) + "_" + std::to_string(g.idx);
}

void vec_add(Vec& a, const Vec& b, const mpz_class& scale) {
  for (const auto& [m, c] : b) {
    auto [it, ins] = a.try_emplace(m, 0);
    it->second += scale * c;
    if (it->second == 0) a.erase(it);
  }
}

Thresholds thresholds(Family fam) {
  switch (fam) {
    case Family::W: return {1, 1, 1};
    case Family::V: return {1, 0, 0};
    case Family::U: return {0, 0, 1};
    case Family::Free: return {INT_MIN, INT_MIN, INT_MIN};
  }
  return {};
}

bool is_creation(Family fam, Gen g) { return g.idx >= thresholds(fam).min_of(g.type); }

namespace {
void add_term(Vec& out, Mono m, const mpz_class& c) {
  auto [it, ins] = out.try_emplace(std::move(m), 0);
  it->second += c;
  if (it->second == 0) out.erase(it);
}
}  // namespace

Vec apply_gen(Gen g, const Vec& v, Family fam) {
  const Thresholds th = thresholds(fam);
  Vec out;
  for (const auto& [m, c] : v) {
    switch (g.type) {
      case GenType::H: {
        if (g.idx < th.h_min) break;  // central, reaches v
        Mono r = m;
        insert_sorted(r.h, g.idx);
        add_term(out, std::move(r), c);
        break;
      }
      case GenType::E: {
        if (g.idx >= th.e_min) {
          Mono r = m;
          insert_sorted(r.e, g.idx);
          add_term(out, std::move(r), c);
          break;
        }
        // Move e_i through the f-block: e_i f_j = f_j e_i + h_{i+j}; e_i v = 0.
        for (std::size_t s = 0; s < m.f.size(); ++s) {
          int hi = g.idx + m.f[s];
          if (hi < th.h_min) continue;
          Mono r = m;
          r.f.erase(r.f.begin() + s);
          insert_sorted(r.h, hi);
          add_term(out, std::move(r), c);
        }
        break;
      }
      case GenType::F: {
        // Move f_j through the e-block: f_j e_i = e_i f_j - h_{i+j}.
        for (std::size_t s = 0; s < m.e.size(); ++s) {
          int hi = g.idx + m.e[s];
          if (hi < th.h_min) continue;
          Mono r = m;
          r.e.erase(r.e.begin() + s);
          insert_sorted(r.h, hi);
          add_term(out, std::move(r), -c);
        }
        if (g.idx >= th.f_min) {
          Mono r = m;
          insert_sorted(r.f, g.idx);
          add_term(out, std::move(r), c);
        }
        break;
      }
    }
  }
  return out;
}

Vec apply_word(const std::vector<Gen>& word, const Vec& v, Family fam) {
  Vec cur = v;
  for (auto it = word.rbegin(); it != word.rend() && !cur.empty(); ++it) cur = apply_gen(*it, cur, fam);
  return cur;
}

Vec normal_order(const std::vector<Gen>& word, Family fam) {
  Vec one;
  one.emplace(Mono{}, 1);
  return apply_word(word, one, fam);
}

namespace {

struct Term {
  std::vector<Gen> word;
  mpz_class c;
};

// Target order: creation letters sorted (h, e, f; then index), annihilators last.
std::pair<int, Gen> order_key(Gen g, Family fam) { return {is_creation(fam, g) ? 0 : 1, g}; }

}  // namespace

Weight word_weight(const std::vector<Gen>& w) {
  Weight s;
  for (Gen g : w) s = s + weight_of(g);
  return s;
}

Vec rewrite_normal_form(const std::vector<Gen>& word, Family fam, std::mt19937_64& rng, RewriteStats* stats) {
  std::vector<Term> live{{word, 1}};
  Vec done;
  const Weight target = word_weight(word);
  while (!live.empty()) {
    std::uniform_int_distribution<std::size_t> pick_term(0, live.size() - 1);
    std::size_t ti = pick_term(rng);
    Term t = std::move(live[ti]);
    live[ti] = std::move(live.back());
    live.pop_back();

    std::vector<std::size_t> swaps;
    for (std::size_t p = 0; p + 1 < t.word.size(); ++p)
      if (order_key(t.word[p + 1], fam) < order_key(t.word[p], fam)) swaps.push_back(p);
    const bool ends_in_annihilator = !t.word.empty() && !is_creation(fam, t.word.back());
    const std::size_t options = swaps.size() + (ends_in_annihilator ? 1 : 0);
    if (options == 0) {
      Mono m;
      for (Gen g : t.word) {
        auto& blk = g.type == GenType::H ? m.h : g.type == GenType::E ? m.e : m.f;
        insert_sorted(blk, g.idx);
      }
      auto [it, ins] = done.try_emplace(std::move(m), 0);
      it->second += t.c;
      if (it->second == 0) done.erase(it);
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, options - 1);
    std::size_t choice = pick(rng);
    if (choice == swaps.size()) continue;  // annihilator reached v
    if (stats) ++stats->rewrites;
    std::size_t p = swaps[choice];
    Gen a = t.word[p], b = t.word[p + 1];
    std::vector<Term> produced;
    Term swapped = t;
    std::swap(swapped.word[p], swapped.word[p + 1]);
    produced.push_back(std::move(swapped));
    int sign = 0;
    if (a.type == GenType::E && b.type == GenType::F) sign = 1;
    if (a.type == GenType::F && b.type == GenType::E) sign = -1;
    if (sign != 0) {
      Term br;
      br.word.assign(t.word.begin(), t.word.begin() + p);
      br.word.push_back(H(a.idx + b.idx));
      br.word.insert(br.word.end(), t.word.begin() + p + 2, t.word.end());
      br.c = sign * t.c;
      produced.push_back(std::move(br));
    }
    for (auto& pr : produced) {
      if (stats) {
        ++stats->weight_checks;
        if (word_weight(pr.word) != target) throw std::logic_error("rewrite changed the weight");
      }
      live.push_back(std::move(pr));
    }
  }
  return done;
}

}  // namespace vp
