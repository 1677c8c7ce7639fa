#include "galoispoint/moebius.hpp"

namespace gp {

Moebius Moebius::make(const RatFunc& a, const RatFunc& b, const RatFunc& c, const RatFunc& d) {
  if ((a * d - b * c).is_zero()) throw Error(Errc::invalid_argument, "Moebius matrix is singular");
  std::array<RatFunc, 4> e{a, b, c, d};
  for (const auto& x : e) {
    if (x.is_zero()) continue;
    const RatFunc inv = inverse(x);
    for (auto& y : e) y *= inv;
    break;
  }
  return Moebius(std::move(e));
}

Moebius Moebius::identity() { return Moebius({RatFunc(1), RatFunc(0), RatFunc(0), RatFunc(1)}); }

bool Moebius::is_identity() const { return e_[1].is_zero() && e_[2].is_zero() && e_[0] == e_[3]; }

Moebius operator*(const Moebius& m, const Moebius& n) {
  return Moebius::make(m.a() * n.a() + m.b() * n.c(), m.a() * n.b() + m.b() * n.d(),
                       m.c() * n.a() + m.d() * n.c(), m.c() * n.b() + m.d() * n.d());
}

std::string Moebius::to_string() const {
  return "[[" + e_[0].to_string() + ", " + e_[1].to_string() + "], [" + e_[2].to_string() + ", " +
         e_[3].to_string() + "]]";
}

Moebius inverse(const Moebius& m) { return Moebius::make(m.d(), -m.b(), -m.c(), m.a()); }

Moebius pow(const Moebius& m, long e) {
  if (e < 0) return pow(inverse(m), -e);
  Moebius r = Moebius::identity(), b = m;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::optional<int> moebius_order(const Moebius& m, int bound) {
  Moebius cur = m;
  for (int k = 1; k <= bound; ++k) {
    if (cur.is_identity()) return k;
    cur = cur * m;
  }
  return std::nullopt;
}

bool equal_up_to_generator_swap(const Moebius& m, const Moebius& n) { return m == n || m == inverse(n); }

Moebius chart_transfer(const Moebius& m) { return Moebius::make(m.d(), m.c(), m.b(), m.a()); }

AlgebraElement apply(const Moebius& m, const AlgebraElement& x) {
  const auto& mod = x.modulus_ptr();
  AlgebraElement num = m.a() * x + AlgebraElement::constant(mod, m.b());
  AlgebraElement den = m.c() * x + AlgebraElement::constant(mod, m.d());
  return num * algebra_inverse(den);
}

}  // namespace gp
