#include "galoispoint/number_field.hpp"

#include <sstream>
#include <utility>

namespace gp {

namespace {

UniPoly<Rational> as_poly(const std::vector<Rational>& v) { return UniPoly<Rational>(v); }

bool same_modulus(const FieldPtr& a, const FieldPtr& b) { return a == b || a->modulus == b->modulus; }

long legendre(long a, long p) {
  long r = 1, base = ((a % p) + p) % p, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : (r == 0 ? 0 : -1);
}

struct SquarefreeSplit {
  Integer root;                 // s = root^2 * core
  Integer core;                 // squarefree, carries the sign
  std::vector<long> odd_primes; // primes dividing |core|, odd
  bool two_divides = false;
};

SquarefreeSplit split_squarefree(Integer s) {
  SquarefreeSplit out{Integer(1), Integer(sgn(s) < 0 ? -1 : 1), {}, false};
  s = abs(s);
  auto take = [&](const Integer& p) {
    int e = 0;
    while (s % p == 0) {
      s /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) out.root *= p;
    if (e % 2 == 1) {
      out.core *= p;
      if (p == 2)
        out.two_divides = true;
      else
        out.odd_primes.push_back(p.get_si());
    }
  };
  take(Integer(2));
  for (Integer p = 3; p * p <= s && p < 1000000; p += 2) take(p);
  if (s > 1) {
    Integer r = sqrt(s);
    if (r * r == s) {
      out.root *= r;
    } else {
      // Remaining cofactor has no prime factor below 10^6; treated as squarefree.
      out.core *= s;
      if (s.fits_slong_p()) out.odd_primes.push_back(s.get_si());
      else out.odd_primes.push_back(-1);
    }
  }
  return out;
}

}  // namespace

FieldPtr make_number_field(std::vector<Rational> modulus, std::string label) {
  UniPoly<Rational> m(modulus);
  if (m.degree() < 1) throw Error(Errc::invalid_argument, "number field modulus must have degree >= 1");
  if (m.leading() != 1) throw Error(Errc::invalid_argument, "number field modulus must be monic");
  if (gcd(m, derivative(m)).degree() > 0)
    throw Error(Errc::invalid_argument, "number field modulus must be squarefree");
  auto ctx = std::make_shared<NumberFieldCtx>();
  ctx->modulus = m.coeffs();
  ctx->label = std::move(label);
  return ctx;
}

UniPoly<Rational> cyclotomic_polynomial(int n) {
  if (n <= 0) throw Error(Errc::invalid_argument, "cyclotomic order must be positive");
  // z^n - 1 = prod_{d | n} Phi_d(z)
  UniPoly<Rational> p = UniPoly<Rational>::monomial(Rational(1), static_cast<std::size_t>(n)) -
                        UniPoly<Rational>(Rational(1));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divexact(p, cyclotomic_polynomial(d));
  return p;
}

FieldPtr make_cyclotomic(int n) {
  if (n <= 0) throw Error(Errc::invalid_argument, "cyclotomic order must be positive");
  auto ctx = std::make_shared<NumberFieldCtx>();
  ctx->modulus = cyclotomic_polynomial(n).coeffs();
  ctx->cyclotomic_order = n;
  switch (n) {
    case 1: case 2: ctx->label = "Q"; break;
    case 3: ctx->label = "Q(omega)"; break;
    case 4: ctx->label = "Q(i)"; break;
    case 6: ctx->label = "Q(zeta_6)"; break;
    default: ctx->label = "Q(zeta_" + std::to_string(n) + ")";
  }
  return ctx;
}

NfElem::NfElem(FieldPtr field, std::vector<Rational> coeffs) : f_(std::move(field)), c_(std::move(coeffs)) {
  if (!f_) {
    if (c_.size() > 1) throw Error(Errc::invalid_argument, "rational element with several coefficients");
    if (c_.empty()) c_.emplace_back(0);
    return;
  }
  reduce();
}

NfElem NfElem::generator(const FieldPtr& field) { return NfElem(field, {Rational(0), Rational(1)}); }

void NfElem::reduce() {
  if (!f_) return;
  const auto& m = f_->modulus;
  const std::size_t deg = m.size() - 1;
  for (std::size_t k = c_.size(); k-- > deg;) {
    if (gp::is_zero(c_[k])) continue;
    const Rational top = c_[k];
    for (std::size_t j = 0; j < deg; ++j) c_[k - deg + j] -= top * m[j];
    c_[k] = 0;
  }
  c_.resize(deg, Rational(0));
}

void NfElem::adopt(const NfElem& o) {
  if (!o.f_ || f_ == o.f_) return;
  if (!f_) {
    f_ = o.f_;
    c_.resize(static_cast<std::size_t>(f_->degree()), Rational(0));
    return;
  }
  if (!same_modulus(f_, o.f_)) throw Error(Errc::invalid_argument, "mixing elements of different number fields");
}

bool NfElem::is_zero() const {
  for (const auto& x : c_)
    if (!gp::is_zero(x)) return false;
  return true;
}

bool NfElem::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!gp::is_zero(c_[i])) return false;
  return true;
}

bool NfElem::is_one() const { return is_rational() && c_[0] == 1; }

Rational NfElem::rational_value() const {
  if (!is_rational()) throw Error(Errc::invalid_argument, "number field element is not rational");
  return c_[0];
}

std::vector<Rational> NfElem::coordinates() const { return c_; }

NfElem& NfElem::operator+=(const NfElem& o) {
  adopt(o);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

NfElem& NfElem::operator-=(const NfElem& o) {
  adopt(o);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

NfElem& NfElem::operator*=(const NfElem& o) {
  if (o.is_rational()) {
    const Rational s = o.c_[0];
    adopt(o);
    for (auto& x : c_) x *= s;
    return *this;
  }
  if (is_rational()) {
    const Rational s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  adopt(o);
  std::vector<Rational> prod(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (gp::is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(prod);
  reduce();
  return *this;
}

NfElem& NfElem::operator/=(const NfElem& o) { return *this *= nf_inverse(o); }

NfElem operator-(NfElem a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

bool operator==(const NfElem& a, const NfElem& b) {
  if (a.f_ && b.f_ && !same_modulus(a.f_, b.f_)) return false;
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

std::string NfElem::to_string() const {
  if (is_rational()) return c_[0].get_str();
  UniPoly<Rational> p(c_);
  std::string s = poly_to_string(p, "z", [](const Rational& r) { return r.get_str(); });
  int terms = 0;
  for (const auto& x : c_) terms += gp::is_zero(x) ? 0 : 1;
  if (terms == 1 && s[0] != '-') return s;
  return "(" + s + ")";
}

NfElem nf_inverse(const NfElem& a) {
  if (a.is_zero()) throw Error(Errc::division_by_zero, "inverse of zero in number field");
  if (a.is_rational()) {
    Rational inv = 1 / a.rational_value();
    return a.field() ? NfElem(a.field(), {inv}) : NfElem(inv);
  }
  const auto& f = a.field();
  auto eg = xgcd(as_poly(a.coordinates()), as_poly(f->modulus));
  if (eg.gcd.degree() != 0) throw Error(Errc::internal, "number field modulus is not irreducible");
  return NfElem(f, eg.u.coeffs());
}

NfElem pow(const NfElem& a, long e) {
  if (e < 0) return pow(nf_inverse(a), -e);
  NfElem r(1), b = a;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

NfElem root_of_unity(const FieldPtr& field, int order) {
  if (!field || field->cyclotomic_order == 0)
    throw Error(Errc::invalid_argument, "roots of unity need a cyclotomic field");
  const int n = field->cyclotomic_order;
  if (order <= 0 || n % order != 0)
    throw Error(Errc::field_too_small, "field " + field->label + " has no primitive " + std::to_string(order) +
                                           "-th root of unity");
  return pow(NfElem::generator(field), n / order);
}

int sqrt_conductor(const Rational& r) {
  if (is_zero(r)) return 1;
  Integer s = r.get_num() * r.get_den();
  auto split = split_squarefree(s);
  long cond = 1;
  int sign_class = sgn(split.core) < 0 ? -1 : 1;
  for (long p : split.odd_primes) {
    if (p < 0) throw Error(Errc::field_too_small, "square root conductor too large");
    cond *= p;
    if ((p - 1) / 2 % 2 == 1) sign_class = -sign_class;
  }
  if (split.two_divides) return static_cast<int>(cond * 8);
  return static_cast<int>(sign_class == 1 ? cond : cond * 4);
}

std::optional<NfElem> sqrt_in_field(const Rational& r, const FieldPtr& field) {
  if (is_zero(r)) return NfElem(0);
  Integer s = r.get_num() * r.get_den();
  auto split = split_squarefree(s);
  Rational scale(split.root, r.get_den());
  scale.canonicalize();
  if (split.core == 1) return NfElem(scale);
  if (!field || field->cyclotomic_order == 0) return std::nullopt;
  const int n = field->cyclotomic_order;

  NfElem acc(scale);
  int sign_class = sgn(split.core) < 0 ? -1 : 1;
  for (long p : split.odd_primes) {
    if (p < 0 || n % p != 0) return std::nullopt;
    // Quadratic Gauss sum: g^2 = (-1)^((p-1)/2) p.
    NfElem zp = root_of_unity(field, static_cast<int>(p));
    NfElem g(0), zpa(1);
    for (long a = 1; a < p; ++a) {
      zpa *= zp;
      g += NfElem(legendre(a, p)) * zpa;
    }
    acc *= g;
    if ((p - 1) / 2 % 2 == 1) sign_class = -sign_class;
  }
  // Remaining factor under the root is sign_class * (2 if two_divides).
  if (split.two_divides) {
    if (n % 8 != 0) return std::nullopt;
    NfElem z8 = root_of_unity(field, 8);
    NfElem z83 = pow(z8, 3);
    acc *= sign_class == 1 ? z8 - z83 : z8 + z83;
  } else if (sign_class == -1) {
    if (n % 4 != 0) return std::nullopt;
    acc *= root_of_unity(field, 4);
  }
  return acc;
}

}  // namespace gp
