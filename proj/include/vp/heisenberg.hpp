#pragma once

#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace vp {

enum class GenType : std::uint8_t { H = 0, E = 1, F = 2 };

struct Gen {
  GenType type;
  int idx;
  bool operator==(const Gen&) const = default;
  auto operator<=>(const Gen&) const = default;
};

inline Gen E(int i) { return {GenType::E, i}; }
inline Gen F(int i) { return {GenType::F, i}; }
inline Gen H(int i) { return {GenType::H, i}; }

struct Weight {
  int m = 0, n = 0, d = 0;
  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;
  Weight operator+(const Weight& o) const { return {m + o.m, n + o.n, d + o.d}; }
  Weight operator-(const Weight& o) const { return {m - o.m, n - o.n, d - o.d}; }
  bool nonneg() const { return m >= 0 && n >= 0; }
};

Weight weight_of(Gen g);
Weight word_weight(const std::vector<Gen>& w);

// PBW-ordered monomial (h's)(e's)(f's), each block a sorted multiset of indices.
struct Mono {
  std::vector<int> h, e, f;
  bool operator==(const Mono&) const = default;
  auto operator<=>(const Mono&) const = default;
  Weight weight() const;
  std::size_t length() const { return h.size() + e.size() + f.size(); }
};

// Renders e.g. "h_1 e_2 f_1 f_1" with exponents collapsed ("f_1^2"), or "1".
std::string to_string(const Mono& m);
// Compact form used by the monomial tables, e.g. "f2h1", "e1", "1" (f, e, h order as printed in tables).
std::string to_compact(const Mono& m);
Mono parse_compact(const std::string& s);
std::string to_string(Gen g);

using Vec = std::map<Mono, mpz_class>;

void vec_add(Vec& a, const Vec& b, const mpz_class& scale = 1);

// Annihilation thresholds at the highest weight vector: a generator with index
// below the minimum kills v. The operator-algebra family has no annihilators.
enum class Family : std::uint8_t { V, U, W, Free };

struct Thresholds {
  int e_min, h_min, f_min;
  int min_of(GenType t) const { return t == GenType::E ? e_min : t == GenType::H ? h_min : f_min; }
};
Thresholds thresholds(Family fam);
bool is_creation(Family fam, Gen g);

// Left action of a generator on a vector of normal monomials.
Vec apply_gen(Gen g, const Vec& v, Family fam);
// Word acting on a vector; word[0] is the leftmost letter.
Vec apply_word(const std::vector<Gen>& word, const Vec& v, Family fam);
// Normal form of word * v (Free family: of the word itself in U(H)).
Vec normal_order(const std::vector<Gen>& word, Family fam);

// Independent normal-ordering engine: rewrites adjacent out-of-order pairs
// (ab -> ba + [a,b]) in an order chosen by rng, killing words that end in an
// annihilator. When check_weights is set every rewrite is checked for weight
// conservation and a std::logic_error is thrown on violation.
struct RewriteStats {
  long rewrites = 0;
  long weight_checks = 0;
};
Vec rewrite_normal_form(const std::vector<Gen>& word, Family fam, std::mt19937_64& rng, RewriteStats* stats = nullptr);

}  // namespace vp

template <>
struct std::hash<vp::Mono> {
  std::size_t operator()(const vp::Mono& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&](int x) { h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ull; };
    for (int x : m.h) mix(x);
    mix(-1000);
    for (int x : m.e) mix(x);
    mix(-2000);
    for (int x : m.f) mix(x);
    return h;
  }
};
