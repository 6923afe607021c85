#include "vp/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace vp {

LaurentPoly3 LaurentPoly3::monomial(int eq, int ez1, int ez2, const mpz_class& c) {
  LaurentPoly3 p;
  p.add_term({eq, ez1, ez2}, c);
  return p;
}

void LaurentPoly3::add_term(const Exp3& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class LaurentPoly3::coeff(const Exp3& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

LaurentPoly3& LaurentPoly3::operator+=(const LaurentPoly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly3& LaurentPoly3::operator-=(const LaurentPoly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly3 operator*(const LaurentPoly3& a, const LaurentPoly3& b) {
  LaurentPoly3 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

LaurentPoly3 LaurentPoly3::shifted(int eq, int ez1, int ez2) const {
  LaurentPoly3 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exp3{e[0] + eq, e[1] + ez1, e[2] + ez2}, c);
  return r;
}

LaurentPoly3 LaurentPoly3::substitute(int q_sign, int z2_qpow) const {
  LaurentPoly3 r;
  for (const auto& [e, c] : terms_) r.add_term({q_sign * e[0] + z2_qpow * e[2], e[1], e[2]}, c);
  return r;
}

mpz_class LaurentPoly3::at_one() const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

namespace {
mpq_class qpow(const mpq_class& x, int n) {
  mpq_class r = 1, b = x;
  if (n < 0) {
    if (x == 0) throw std::domain_error("negative power of zero");
    b = 1 / x;
    n = -n;
  }
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}
}  // namespace

mpq_class LaurentPoly3::evaluate(const mpq_class& q, const mpq_class& z1, const mpq_class& z2) const {
  mpq_class s = 0;
  for (const auto& [e, c] : terms_) s += mpq_class(c) * qpow(q, e[0]) * qpow(z1, e[1]) * qpow(z2, e[2]);
  s.canonicalize();
  return s;
}

LaurentPoly3 LaurentPoly3::truncated(int dmax) const {
  LaurentPoly3 r;
  for (const auto& [e, c] : terms_)
    if (e[0] <= dmax) r.terms_.emplace(e, c);
  return r;
}

std::string LaurentPoly3::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names[3] = {"q", "z1", "z2"};
  for (const auto& [e, c] : terms_) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any = false;
    if (a != 1) {
      os << a.get_str();
      any = true;
    }
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (any) os << "*";
      os << names[v];
      if (e[v] != 1) os << "^" << e[v];
      any = true;
    }
    if (!any) os << "1";
  }
  return os.str();
}

LaurentPoly3 parse_monomial(const std::string& text, int n_value) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty monomial");
  int sign = 1;
  if (s[0] == '-' || s[0] == '+') {
    if (s[0] == '-') sign = -1;
    s.erase(0, 1);
  }
  mpz_class coef = sign;
  Exp3 e{0, 0, 0};
  std::stringstream ss(s);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    if (factor.empty()) throw std::invalid_argument("bad monomial: " + text);
    if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
      coef *= mpz_class(factor);
      continue;
    }
    std::string base = factor, expo = "1";
    if (auto p = factor.find('^'); p != std::string::npos) {
      base = factor.substr(0, p);
      expo = factor.substr(p + 1);
    }
    int ev = 0;
    if (expo == "N") ev = n_value;
    else if (expo == "-N") ev = -n_value;
    else ev = std::stoi(expo);
    if (base == "q") e[0] += ev;
    else if (base == "z1") e[1] += ev;
    else if (base == "z2") e[2] += ev;
    else throw std::invalid_argument("unknown variable in monomial: " + text);
  }
  LaurentPoly3 r;
  r.add_term(e, coef);
  return r;
}

}  // namespace vp
