#include "doctest.h"
#include "vp/laurent.hpp"

using namespace vp;

TEST_CASE("zero coefficients are dropped") {
  auto p = LaurentPoly3::monomial(1, 0, 2, 3);
  p.add_term({1, 0, 2}, -3);
  CHECK(p.is_zero());
  CHECK(p == LaurentPoly3{});
}

TEST_CASE("product of binomials") {
  const auto one = LaurentPoly3::constant(1);
  const auto q = LaurentPoly3::monomial(1, 0, 0);
  const auto z2 = LaurentPoly3::monomial(0, 0, 1);
  const auto p = (one + q) * (one - z2);
  CHECK(p.size() == 4);
  CHECK(p.coeff({1, 0, 1}) == -1);
  CHECK(p.at_one() == 0);
  CHECK(p.to_string() == "1 - z2 + q - q*z2");
}

TEST_CASE("substitution z2 -> q z2 and q -> 1/q") {
  const auto p = LaurentPoly3::monomial(2, 1, 3, 5);
  CHECK(p.substitute(1, 1) == LaurentPoly3::monomial(5, 1, 3, 5));
  CHECK(p.substitute(-1, 0) == LaurentPoly3::monomial(-2, 1, 3, 5));
}

TEST_CASE("exact evaluation matches term-by-term arithmetic") {
  auto p = LaurentPoly3::monomial(2, -1, 0, 3) + LaurentPoly3::monomial(0, 0, 1, -2);
  const mpq_class q(1, 2), z1(3), z2(-5, 7);
  const mpq_class want = mpq_class(3) * q * q / z1 - mpq_class(2) * z2;
  CHECK(p.evaluate(q, z1, z2) == want);
}

TEST_CASE("truncation drops high q degrees") {
  auto p = LaurentPoly3::monomial(0, 0, 0) + LaurentPoly3::monomial(4, 0, 0);
  CHECK(p.truncated(3) == LaurentPoly3::constant(1));
}

TEST_CASE("monomial parser") {
  CHECK(parse_monomial("q^N*z1*z2", 3) == LaurentPoly3::monomial(3, 1, 1));
  CHECK(parse_monomial("z2", 0) == LaurentPoly3::monomial(0, 0, 1));
  CHECK(parse_monomial("0", 0).is_zero());
  CHECK(parse_monomial("-3*q^2", 0) == LaurentPoly3::monomial(2, 0, 0, -3));
  CHECK_THROWS(parse_monomial("x^2", 0));
}
