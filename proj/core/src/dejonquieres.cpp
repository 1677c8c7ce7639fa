#include "galoispoint/dejonquieres.hpp"

namespace gp {

namespace {

const TriPoly& x0() {
  static const TriPoly v = TriPoly::variable(0);
  return v;
}
const TriPoly& x1() {
  static const TriPoly v = TriPoly::variable(1);
  return v;
}
const TriPoly& x2() {
  static const TriPoly v = TriPoly::variable(2);
  return v;
}

// Terms with x2-exponent k, x2^k removed.
TriPoly x2_part(const TriPoly& p, int k) {
  TriPoly r;
  for (const auto& [m, c] : p.terms())
    if (m[2] == k) r += TriPoly::monomial(c, {m[0], m[1], 0});
  return r;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::malformed_map, what);
}

bool binary_homogeneous(const TriPoly& p) { return p.is_zero() || (p.is_homogeneous() && p.degree_in(2) <= 0); }

}  // namespace

DeJonquieresMap DeJonquieresMap::from_forms(TriPoly a, TriPoly b, TriPoly c, TriPoly d) {
  require(binary_homogeneous(a) && binary_homogeneous(b) && binary_homogeneous(c) && binary_homogeneous(d),
          "coefficients must be binary forms in x0, x1");
  require(!a.is_zero() || !c.is_zero(), "map must involve x2");
  require(!(a * d - b * c).is_zero(), "determinant ad - bc vanishes");
  const TriPoly g = binary_form_gcd({a, b, c, d});
  if (!g.is_constant()) {
    for (TriPoly* p : {&a, &b, &c, &d})
      if (!p->is_zero()) *p = *divide_exact(*p, g);
  }
  int deg = !a.is_zero() ? a.total_degree() + 1 : c.total_degree() + 2;
  require(a.is_zero() || a.total_degree() == deg - 1, "deg a must be deg f - 1");
  require(b.is_zero() || b.total_degree() == deg, "deg b must be deg f");
  require(c.is_zero() || c.total_degree() == deg - 2, "deg c must be deg f - 2");
  require(d.is_zero() || d.total_degree() == deg - 1, "deg d must be deg f - 1");
  require(deg >= 1, "negative degree");
  // Leading coefficient of q x0 equals that of q.
  const TriPoly q = c * x2() + d;
  const NfElem inv = nf_inverse(q.terms().begin()->second);
  DeJonquieresMap m;
  m.a_ = a * inv;
  m.b_ = b * inv;
  m.c_ = c * inv;
  m.d_ = d * inv;
  m.degree_ = deg;
  return m;
}

DeJonquieresMap DeJonquieresMap::from_components(const Components& comps) {
  for (const auto& p : comps) require(p.is_homogeneous() && !p.is_zero(), "components must be nonzero forms");
  auto q = divide_exact(comps[0], x0());
  require(q.has_value() && *q * x1() == comps[1], "components must be (q x0, q x1, f)");
  require(q->degree_in(2) <= 1 && comps[2].degree_in(2) <= 1, "q and f must be linear in x2");
  return from_forms(x2_part(comps[2], 1), x2_part(comps[2], 0), x2_part(*q, 1), x2_part(*q, 0));
}

TriPoly DeJonquieresMap::f() const { return a_ * x2() + b_; }
TriPoly DeJonquieresMap::q() const { return c_ * x2() + d_; }

Components DeJonquieresMap::components() const {
  const TriPoly qq = q();
  return {qq * x0(), qq * x1(), f()};
}

Moebius DeJonquieresMap::moebius() const {
  return Moebius::make(RatFunc(binary_dehomogenize(a_)), RatFunc(binary_dehomogenize(b_)),
                       RatFunc(binary_dehomogenize(c_)), RatFunc(binary_dehomogenize(d_)));
}

DeJonquieresMap dejonquieres_lift(const Moebius& m) {
  NfPoly l(NfElem(1));
  for (const auto& e : m.entries())
    if (!e.is_zero()) l = divexact(l * e.den(), gcd(l, e.den()));
  std::array<NfPoly, 4> p;
  int deg = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const RatFunc& e = m.entries()[i];
    p[i] = e.is_zero() ? NfPoly() : e.num() * divexact(l, e.den());
    deg = std::max(deg, p[i].degree());
  }
  const TriPoly al = binary_homogenize(p[0], deg), be = binary_homogenize(p[1], deg);
  const TriPoly ga = binary_homogenize(p[2], deg), de = binary_homogenize(p[3], deg);
  return DeJonquieresMap::from_forms(x0() * al, x0() * x0() * be, ga, x0() * de);
}

Components compose_components(const Components& f, const Components& g) {
  return {f[0].substitute(g), f[1].substitute(g), f[2].substitute(g)};
}

DeJonquieresMap dj_compose(const DeJonquieresMap& f, const DeJonquieresMap& g) {
  Components raw = compose_components(f.components(), g.components());
  // Every component of F(G) carries q_G^(deg F - 1).
  const TriPoly qg = g.q();
  if (!qg.is_constant()) {
    for (int k = 0; k < f.degree() - 1; ++k)
      for (auto& p : raw) {
        auto r = divide_exact(p, qg);
        if (!r) throw Error(Errc::internal, "composition lost the q_G factor");
        p = std::move(*r);
      }
  }
  return DeJonquieresMap::from_components(raw);
}

DeJonquieresMap dj_inverse(const DeJonquieresMap& f) { return dejonquieres_lift(inverse(f.moebius())); }

bool is_identity_map(const Components& c) {
  if (c[0].is_zero()) return false;
  return c[0] * x1() == c[1] * x0() && c[0] * x2() == c[2] * x0();
}

bool same_map(const Components& a, const Components& b) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (!(a[i] * b[j] == a[j] * b[i])) return false;
  return !a[0].is_zero() || !a[1].is_zero() || !a[2].is_zero();
}

bool dj_verify_birational(const DeJonquieresMap& f) {
  const DeJonquieresMap inv = dj_inverse(f);
  return is_identity_map(compose_components(inv.components(), f.components())) &&
         is_identity_map(compose_components(f.components(), inv.components()));
}

std::optional<int> dj_order(const DeJonquieresMap& f, int bound) {
  DeJonquieresMap cur = f;
  for (int k = 1; k <= bound; ++k) {
    if (is_identity_map(cur.components())) return k;
    if (k < bound) cur = dj_compose(f, cur);
  }
  return std::nullopt;
}

std::optional<TriPoly> pullback_divides(const Components& f, const TriPoly& phi) {
  return divide_exact(phi.substitute(f), phi);
}

bool rho_restriction_trivial(const Components& f) { return (f[0] * x1() - f[1] * x0()).is_zero(); }

std::string to_string(const Components& comps) {
  return "(" + comps[0].to_string(kProjectiveNames) + " : " + comps[1].to_string(kProjectiveNames) + " : " +
         comps[2].to_string(kProjectiveNames) + ")";
}

}  // namespace gp
