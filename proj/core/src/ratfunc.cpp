#include "galoispoint/ratfunc.hpp"

namespace gp {

namespace {

bool is_one_poly(const NfPoly& p) { return p.degree() == 0 && p.leading().is_one(); }

bool needs_parens(const std::string& s) {
  if (s.find(' ') == std::string::npos) return false;
  if (s.front() != '(') return true;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
    if (depth == 0) return i + 1 != s.size();
  }
  return true;
}

}  // namespace

RatFunc RatFunc::make(const NfPoly& num, const NfPoly& den) {
  if (den.is_zero()) throw Error(Errc::division_by_zero, "rational function with zero denominator");
  if (num.is_zero()) return RatFunc();
  if (den.degree() == 0) {
    if (den.leading().is_one()) return RatFunc(num, den, true);
    return RatFunc(num * nf_inverse(den.leading()), NfPoly(NfElem(1)), true);
  }
  NfPoly g = gcd(num, den);
  NfPoly n = num, d = den;
  if (g.degree() > 0) {
    n = divexact(num, g);
    d = divexact(den, g);
  }
  const NfElem inv = nf_inverse(d.leading());
  return RatFunc(n * inv, d * inv, true);
}

RatFunc RatFunc::t() { return RatFunc(NfPoly::variable()); }

NfElem RatFunc::constant_value() const {
  if (!is_constant()) throw Error(Errc::invalid_argument, "rational function is not constant");
  return num_.is_zero() ? NfElem(0) : num_.leading();
}

NfElem RatFunc::evaluate(const NfElem& at) const {
  NfElem d = den_(at);
  if (d.is_zero()) throw Error(Errc::division_by_zero, "rational function evaluated at a pole");
  return num_(at) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (is_one_poly(den_)) {
      num_ += o.num_;
      return *this;
    }
    return *this = make(num_ + o.num_, den_);
  }
  if (is_one_poly(o.den_)) return *this = RatFunc(num_ + o.num_ * den_, den_, true);
  if (is_one_poly(den_)) return *this = RatFunc(num_ * o.den_ + o.num_, o.den_, true);
  NfPoly g = gcd(den_, o.den_);
  NfPoly a = divexact(den_, g), b = divexact(o.den_, g);
  return *this = make(num_ * b + o.num_ * a, den_ * b);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  // Cross-cancel so the product is already reduced.
  NfPoly g1 = (den_.degree() > 0 || o.den_.degree() > 0) ? gcd(num_, o.den_) : NfPoly(NfElem(1));
  NfPoly g2 = (den_.degree() > 0 || o.den_.degree() > 0) ? gcd(o.num_, den_) : NfPoly(NfElem(1));
  NfPoly n1 = g1.degree() > 0 ? divexact(num_, g1) : num_;
  NfPoly d2 = g1.degree() > 0 ? divexact(o.den_, g1) : o.den_;
  NfPoly n2 = g2.degree() > 0 ? divexact(o.num_, g2) : o.num_;
  NfPoly d1 = g2.degree() > 0 ? divexact(den_, g2) : den_;
  num_ = n1 * n2;
  den_ = d1 * d2;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= inverse(o); }

RatFunc inverse(const RatFunc& a) {
  if (a.is_zero()) throw Error(Errc::division_by_zero, "inverse of zero rational function");
  return RatFunc::make(a.den(), a.num());
}

RatFunc pow(const RatFunc& a, long e) {
  if (e < 0) return pow(inverse(a), -e);
  RatFunc r(1), b = a;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

std::string to_string(const NfPoly& p, const std::string& var) {
  return poly_to_string(p, var, [](const NfElem& c) { return c.to_string(); });
}

std::string RatFunc::to_string(const std::string& var) const {
  std::string n = gp::to_string(num_, var);
  if (is_one_poly(den_)) return n;
  std::string d = gp::to_string(den_, var);
  if (needs_parens(n)) n = "(" + n + ")";
  // a bare power like t^2 is parsed tighter than '/'
  if (needs_parens(d) || d.find('^') != std::string::npos || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

std::string coeff_string(const RatFunc& a, const std::string& var) {
  std::string s = a.to_string(var);
  bool simple = a.den().degree() == 0 && !needs_parens(s);
  return simple ? s : "(" + s + ")";
}

}  // namespace gp
