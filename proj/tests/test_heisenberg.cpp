#include <random>

#include "doctest.h"
#include "vp/heisenberg.hpp"

using namespace vp;

namespace {

Vec single(const Mono& m, long c = 1) { return Vec{{m, c}}; }

// Applies a word letter by letter with the independent rewriting engine.
Vec rewrite_all(const std::vector<Gen>& word, Family f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return rewrite_normal_form(word, f, rng);
}

}  // namespace

TEST_CASE("commutator [e_i, f_j] = h_{i+j}") {
  // Normal order is (h)(e)(f): e_1 f_2 is already ordered and f_2 e_1 = e_1 f_2 - h_3.
  const Vec got = normal_order({E(1), F(2)}, Family::Free);
  CHECK(got == single(Mono{{}, {1}, {2}}));
  Vec want;
  want[Mono{{}, {1}, {2}}] = 1;
  want[Mono{{3}, {}, {}}] = -1;
  CHECK(normal_order({F(2), E(1)}, Family::Free) == want);
}

TEST_CASE("h is central") {
  CHECK(normal_order({H(2), E(1)}, Family::Free) == normal_order({E(1), H(2)}, Family::Free));
  CHECK(normal_order({F(0), H(-1)}, Family::Free) == normal_order({H(-1), F(0)}, Family::Free));
}

TEST_CASE("annihilation thresholds of the W family") {
  const Vec vac = single(Mono{});
  CHECK(apply_gen(E(0), vac, Family::W).empty());
  CHECK(apply_gen(F(0), vac, Family::W).empty());
  CHECK(apply_gen(H(0), vac, Family::W).empty());
  CHECK_FALSE(apply_gen(E(1), vac, Family::W).empty());
  CHECK_FALSE(apply_gen(F(1), vac, Family::W).empty());
  // e_0 f_1 v = f_1 e_0 v + h_1 v = h_1 v.
  CHECK(apply_word({E(0), F(1)}, vac, Family::W) == single(Mono{{1}, {}, {}}));
}

TEST_CASE("V family: e_0 kills v but f_0 does not") {
  const Vec vac = single(Mono{});
  CHECK(apply_gen(E(0), vac, Family::V).empty());
  CHECK_FALSE(apply_gen(F(0), vac, Family::V).empty());
  CHECK(apply_word({E(0), F(0)}, vac, Family::V) == single(Mono{{0}, {}, {}}));
}

TEST_CASE("rewriting engine agrees with the direct normal order") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> len(1, 5), typ(0, 2), idx(-1, 2), fam(0, 3);
  for (int n = 0; n < 300; ++n) {
    std::vector<Gen> word(len(rng));
    for (auto& g : word) g = Gen{static_cast<GenType>(typ(rng)), idx(rng)};
    const Family f = static_cast<Family>(fam(rng));
    const Vec want = normal_order(word, f);
    CHECK(rewrite_all(word, f, n) == want);
    CHECK(rewrite_all(word, f, n + 1000) == want);
    CHECK(apply_word(word, single(Mono{}), f) == want);
  }
}

TEST_CASE("weights are conserved") {
  std::mt19937_64 rng(5);
  const std::vector<Gen> word{F(1), E(2), H(1), E(0), F(3)};
  const Weight w = word_weight(word);
  RewriteStats st;
  const Vec v = rewrite_normal_form(word, Family::Free, rng, &st);
  CHECK(st.rewrites > 0);
  CHECK(st.weight_checks >= st.rewrites);
  for (const auto& [m, c] : v) CHECK(m.weight() == w);
}

TEST_CASE("monomial rendering") {
  const Mono m{{1}, {2}, {1, 1}};
  CHECK(to_string(m) == "h_1 e_2 f_1^2");
  CHECK(to_string(Mono{}) == "1");
  CHECK(parse_compact(to_compact(m)) == m);
  CHECK(parse_compact("f2h1") == Mono{{1}, {}, {2}});
}
