#pragma once

// Dense univariate polynomials over an exact field (or, for the resultant,
// an integral domain with exact division).
//
// Requirements on the coefficient type F:
//   - F(0), F(1) construct the additive and multiplicative identities;
//   - + - * and unary -, ==;
//   - a free `is_zero(const F&)` found by ordinary lookup or ADL;
//   - for field algorithms (divmod, gcd, ...) also operator/.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "galoispoint/error.hpp"
#include "galoispoint/rational.hpp"

namespace gp {

namespace detail {
template <class T>
bool coeff_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

template <class F>
class UniPoly {
 public:
  using value_type = F;

  UniPoly() = default;
  explicit UniPoly(F constant) {
    if (!detail::coeff_is_zero(constant)) c_.push_back(std::move(constant));
  }
  explicit UniPoly(std::vector<F> ascending) : c_(std::move(ascending)) { trim(); }

  static UniPoly monomial(F coeff, std::size_t k) {
    if (detail::coeff_is_zero(coeff)) return {};
    std::vector<F> v(k + 1, F(0));
    v[k] = std::move(coeff);
    return UniPoly(std::move(v));
  }
  static UniPoly variable() { return monomial(F(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }

  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
  const F& leading() const {
    if (c_.empty()) throw Error(Errc::invalid_argument, "leading coefficient of zero polynomial");
    return c_.back();
  }

  /// Horner evaluation in F.
  F operator()(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly& operator*=(const F& s) {
    if (gp_is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& a : c_) a = a * s;
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (gp_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(UniPoly a, const F& s) { return a *= s; }
  friend UniPoly operator*(const F& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  static bool gp_is_zero(const F& x) { return detail::coeff_is_zero(x); }
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class F>
bool is_zero(const UniPoly<F>& p) {
  return p.is_zero();
}

template <class F>
UniPoly<F> pow(const UniPoly<F>& base, unsigned e) {
  UniPoly<F> result(F(1)), b = base;
  while (e) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return result;
}

template <class F>
UniPoly<F> derivative(const UniPoly<F>& p) {
  if (p.degree() <= 0) return {};
  std::vector<F> d;
  d.reserve(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) d.push_back(p.coeffs()[i] * F(static_cast<long>(i)));
  return UniPoly<F>(std::move(d));
}

/// p(q(X)).
template <class F>
UniPoly<F> compose(const UniPoly<F>& p, const UniPoly<F>& q) {
  UniPoly<F> acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + UniPoly<F>(*it);
  return acc;
}

template <class F>
struct DivMod {
  UniPoly<F> quotient;
  UniPoly<F> remainder;
};

template <class F>
DivMod<F> divmod(const UniPoly<F>& a, const UniPoly<F>& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly<F>(), a};
  std::vector<F> rem = a.coeffs();
  const int db = b.degree();
  const bool monic = b.leading() == F(1);
  const F inv_lc = monic ? F(1) : F(1) / b.leading();
  std::vector<F> quo(static_cast<std::size_t>(a.degree() - db + 1), F(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    const F& top = rem[static_cast<std::size_t>(k + db)];
    if (is_zero(top)) continue;
    F q = monic ? top : top * inv_lc;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(k + j);
      rem[idx] = rem[idx] - q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    quo[static_cast<std::size_t>(k)] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly<F>(std::move(quo)), UniPoly<F>(std::move(rem))};
}

/// Quotient a / b; throws if b does not divide a.
template <class F>
UniPoly<F> divexact(const UniPoly<F>& a, const UniPoly<F>& b) {
  auto qr = divmod(a, b);
  if (!qr.remainder.is_zero()) throw Error(Errc::internal, "inexact polynomial division");
  return std::move(qr.quotient);
}

template <class F>
UniPoly<F> make_monic(const UniPoly<F>& p) {
  if (p.is_zero() || p.leading() == F(1)) return p;
  return p * (F(1) / p.leading());
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
  if (b.is_zero()) return a.is_zero() ? a : make_monic(a);
  // monic remainders keep coefficient growth in check
  b = make_monic(b);
  while (!b.is_zero()) {
    UniPoly<F> r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.is_zero() ? std::move(r) : make_monic(r);
  }
  return a;
}

template <class F>
struct Xgcd {
  UniPoly<F> gcd;  // monic
  UniPoly<F> u;
  UniPoly<F> v;    // u*f + v*g == gcd
};

template <class F>
Xgcd<F> xgcd(const UniPoly<F>& f, const UniPoly<F>& g) {
  if (f.is_zero() && g.is_zero()) throw Error(Errc::invalid_argument, "xgcd of two zero polynomials");
  UniPoly<F> r0 = f, r1 = g;
  UniPoly<F> s0(F(1)), s1, t0, t1(F(1));
  while (!r1.is_zero()) {
    auto qr = divmod(r0, r1);
    UniPoly<F> s2 = s0 - qr.quotient * s1;
    UniPoly<F> t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const F inv = F(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// f / gcd(f, f'), made monic.
template <class F>
UniPoly<F> squarefree_part(const UniPoly<F>& f) {
  if (f.is_zero()) throw Error(Errc::invalid_argument, "squarefree part of zero polynomial");
  if (f.degree() == 0) return UniPoly<F>(F(1));
  return make_monic(divexact(f, gcd(f, derivative(f))));
}

template <class F>
struct SquarefreeFactor {
  UniPoly<F> factor;  // monic, squarefree, pairwise coprime across the list
  int multiplicity;
};

/// Yun's algorithm: f = lc(f) * prod factor^multiplicity (characteristic zero).
template <class F>
std::vector<SquarefreeFactor<F>> squarefree_decomposition(const UniPoly<F>& f) {
  if (f.is_zero()) throw Error(Errc::invalid_argument, "squarefree decomposition of zero polynomial");
  std::vector<SquarefreeFactor<F>> out;
  if (f.degree() == 0) return out;
  UniPoly<F> fm = make_monic(f);
  UniPoly<F> df = derivative(fm);
  UniPoly<F> a = gcd(fm, df);
  UniPoly<F> b = divexact(fm, a);
  UniPoly<F> c = divexact(df, a);
  UniPoly<F> d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    UniPoly<F> ai = gcd(b, d);
    b = divexact(b, ai);
    c = divexact(d, ai);
    d = c - derivative(b);
    if (ai.degree() > 0) out.push_back({make_monic(ai), i});
  }
  return out;
}

// Exact division in the coefficient ring; specialised for polynomial rings.
template <class R>
R exact_quotient(const R& a, const R& b) {
  return a / b;
}
template <class F>
UniPoly<F> exact_quotient(const UniPoly<F>& a, const UniPoly<F>& b) {
  return divexact(a, b);
}

/// Determinant over an integral domain by fraction-free (Bareiss) elimination.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  bool negate = false;
  R prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t piv = k + 1;
      while (piv < n && is_zero(m[piv][k])) ++piv;
      if (piv == n) return R(0);
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_quotient(num, prev);
      }
      m[i][k] = R(0);
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate ? R(-det) : det;
}

/// Sylvester matrix with the deg(g) shifted rows of f first, then the
/// deg(f) shifted rows of g; coefficients in descending order.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const UniPoly<R>& f, const UniPoly<R>& g) {
  const int m = f.degree(), n = g.degree();
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<R>> s(size, std::vector<R>(size, R(0)));
  for (int row = 0; row < n; ++row)
    for (int j = 0; j <= m; ++j)
      s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] = f.coeffs()[static_cast<std::size_t>(m - j)];
  for (int row = 0; row < m; ++row)
    for (int j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + j)] = g.coeffs()[static_cast<std::size_t>(n - j)];
  return s;
}

/// Res(f, g) = det Sylvester(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a).
template <class R>
R resultant(const UniPoly<R>& f, const UniPoly<R>& g) {
  if (f.degree() <= 0 && g.degree() <= 0)
    throw Error(Errc::invalid_argument, "resultant of two constant polynomials");
  if (f.is_zero() || g.is_zero()) return R(0);
  return bareiss_determinant(sylvester_matrix(f, g));
}

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f).
template <class F>
F discriminant(const UniPoly<F>& f) {
  const int d = f.degree();
  if (d < 2) throw Error(Errc::invalid_argument, "discriminant needs degree >= 2");
  F r = resultant(f, derivative(f)) / f.leading();
  if ((d * (d - 1) / 2) % 2 != 0) r = -r;
  return r;
}

/// Plain text rendering, highest degree first, e.g. "X^3 + (-t)*X + 1".
/// `coeff_str` must render a coefficient; multi-term coefficients are expected
/// to come back parenthesised.
template <class F, class CoeffStr>
std::string poly_to_string(const UniPoly<F>& p, const std::string& var, CoeffStr coeff_str) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const F& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (is_zero(c)) continue;
    std::string cs = coeff_str(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << cs;
      continue;
    }
    if (cs != "1") os << cs << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

}  // namespace gp
