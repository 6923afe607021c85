#pragma once

#include <array>
#include <map>
#include <string>

#include <gmpxx.h>

namespace vp {

// Exponent triple (q, z1, z2).
using Exp3 = std::array<int, 3>;

// Sparse Laurent polynomial in q, z1, z2 with exact integer coefficients.
// Zero coefficients are never stored, so structural equality is polynomial equality.
class LaurentPoly3 {
public:
  LaurentPoly3() = default;
  static LaurentPoly3 monomial(int eq, int ez1, int ez2, const mpz_class& c = 1);
  static LaurentPoly3 constant(const mpz_class& c) { return monomial(0, 0, 0, c); }

  void add_term(const Exp3& e, const mpz_class& c);

  const std::map<Exp3, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  mpz_class coeff(const Exp3& e) const;

  LaurentPoly3& operator+=(const LaurentPoly3& o);
  LaurentPoly3& operator-=(const LaurentPoly3& o);
  friend LaurentPoly3 operator+(LaurentPoly3 a, const LaurentPoly3& b) { return a += b; }
  friend LaurentPoly3 operator-(LaurentPoly3 a, const LaurentPoly3& b) { return a -= b; }
  friend LaurentPoly3 operator*(const LaurentPoly3& a, const LaurentPoly3& b);
  friend bool operator==(const LaurentPoly3& a, const LaurentPoly3& b) { return a.terms_ == b.terms_; }

  // Multiply by q^eq z1^ez1 z2^ez2.
  LaurentPoly3 shifted(int eq, int ez1, int ez2) const;

  // (eq, ez1, ez2) -> (q_sign*eq + z2_qpow*ez2, ez1, ez2), i.e. q -> q^{q_sign} and z2 -> z2 q^{z2_qpow}.
  LaurentPoly3 substitute(int q_sign, int z2_qpow) const;

  // Value at q = z1 = z2 = 1.
  mpz_class at_one() const;
  // Exact value at a rational point; negative exponents are allowed for nonzero arguments.
  mpq_class evaluate(const mpq_class& q, const mpq_class& z1, const mpq_class& z2) const;

  // Drop all terms of q-degree above dmax.
  LaurentPoly3 truncated(int dmax) const;

  // Human readable form, e.g. "1 + q*z2" or "2*q^3*z1 - z2^-1".
  std::string to_string() const;

private:
  std::map<Exp3, mpz_class> terms_;
};

// Parses a single signed monomial such as "q^N*z1*z2", "z2", "1", "0" or "-3*q^2".
// The symbol N in an exponent is replaced by n_value.
LaurentPoly3 parse_monomial(const std::string& text, int n_value);

}  // namespace vp
