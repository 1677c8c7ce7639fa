#include "galoispoint/galois_kummer.hpp"

#include "galoispoint/linalg.hpp"

namespace gp {

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Multiplicities of the zeros of a nonzero polynomial.
std::vector<int> multiplicities(const NfPoly& p) {
  std::vector<int> out;
  for (const auto& f : squarefree_decomposition(p)) out.push_back(f.multiplicity);
  return out;
}

// sqrt of a monic polynomial whose multiplicities are all even.
std::optional<NfPoly> sqrt_monic(const NfPoly& p) {
  NfPoly root(NfElem(1));
  for (const auto& f : squarefree_decomposition(p)) {
    if (f.multiplicity % 2) return std::nullopt;
    root *= pow(f.factor, static_cast<unsigned>(f.multiplicity / 2));
  }
  return root;
}

bool is_square_up_to_constant(const RatFunc& r) {
  for (const NfPoly* p : {&r.num(), &r.den()})
    for (int m : multiplicities(*p))
      if (m % 2) return false;
  return true;
}

// Columns are the power-basis coordinates of the given elements.
Matrix<RatFunc> coordinate_matrix(const std::vector<AlgebraElement>& cols) {
  const auto n = static_cast<std::size_t>(cols.front().dimension());
  Matrix<RatFunc> m(n, std::vector<RatFunc>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const auto c = cols[j].coordinates();
    for (std::size_t i = 0; i < n; ++i) m[i][j] = c[i];
  }
  return m;
}

}  // namespace

KummerCertificate kummer_certificate(const RatFunc& q, int n) {
  if (q.is_zero()) return {false, "radicand is zero"};
  if (q.is_constant()) return {false, "radicand is constant, hence an n-th power over C"};
  std::vector<int> mult = multiplicities(q.num());
  for (int m : multiplicities(q.den())) mult.push_back(m);
  for (int p : prime_divisors(n)) {
    bool all_divisible = true;
    for (int m : mult) all_divisible = all_divisible && m % p == 0;
    if (all_divisible)
      return {false, "radicand is a " + std::to_string(p) + "-th power in C(t)"};
  }
  std::string detail = "Y^" + std::to_string(n) + " - q irreducible: zero/pole multiplicities";
  for (std::size_t i = 0; i < mult.size(); ++i) detail += (i ? ", " : " ") + std::to_string(mult[i]);
  return {true, detail};
}

void validate(const KummerPresentation& kp) {
  if (kp.n < 3) throw Error(Errc::invalid_argument, "Kummer order n must be at least 3");
  if (static_cast<int>(kp.coeffs.size()) != kp.n)
    throw Error(Errc::invalid_argument, "expected " + std::to_string(kp.n) + " coefficients c_0..c_{n-1}");
  if (!pow(kp.zeta, kp.n).is_one()) throw Error(Errc::invalid_argument, "zeta is not an n-th root of unity");
  for (int k = 1; k < kp.n; ++k)
    if (kp.n % k == 0 && pow(kp.zeta, k).is_one())
      throw Error(Errc::invalid_argument, "zeta is not a primitive n-th root of unity");
  bool moves = false;
  for (std::size_t i = 1; i < kp.coeffs.size(); ++i) moves = moves || !kp.coeffs[i].is_zero();
  if (!moves) throw Error(Errc::invalid_argument, "all of c_1..c_{n-1} vanish; x lies in K");
  KummerCertificate cert = kummer_certificate(kp.radicand, kp.n);
  if (!cert.irreducible) throw Error(Errc::invalid_argument, cert.detail);
}

FiberPolynomial kummer_minimal_polynomial(const KummerPresentation& kp, std::string* diagnostic) {
  validate(kp);
  const auto n = static_cast<std::size_t>(kp.n);
  std::vector<KPoly> f(n + 1);
  f[0] = KPoly(-kp.radicand);
  f[n] = KPoly(RatFunc(1));
  std::vector<KPoly> g(n);
  g[0] = KPoly({-kp.coeffs[0], RatFunc(1)});
  for (std::size_t i = 1; i < n; ++i) g[i] = KPoly(-kp.coeffs[i]);
  KPoly charpoly = resultant(UniPoly<KPoly>(std::move(f)), UniPoly<KPoly>(std::move(g)));
  FiberPolynomial out;
  out.h = make_monic(squarefree_part(charpoly));
  out.original_leading = RatFunc(1);
  KummerCertificate cert = kummer_certificate(kp.radicand, kp.n);
  if (out.h.degree() == kp.n) {
    out.irreducibility = Irreducibility::certified;
    out.certificate = cert.detail;
  } else if (diagnostic) {
    *diagnostic = "non-generating: x has degree " + std::to_string(out.h.degree()) + " over K";
  }
  return out;
}

bool geometric_check(const std::vector<RatFunc>& c) {
  if (c.empty() || c[0].is_zero()) return false;
  for (std::size_t i = 1; i + 1 < c.size(); ++i)
    if (!(c[i + 1] * c[i - 1] == c[i] * c[i])) return false;
  return true;
}

GeometricMoebius geometric_moebius(const KummerPresentation& kp) {
  validate(kp);
  const int n = kp.n;
  const auto& c = kp.coeffs;
  if (c[1].is_zero()) {
    if (n != 3) throw Error(Errc::invalid_argument, "c_1 = 0 is only supported for n = 3");
    // x = c0 + c2 theta^2 and theta^2 is a cube root of q^2 moved by zeta^2.
    KummerPresentation sq{3, kp.radicand * kp.radicand, {c[0], c[2], RatFunc(0)}, kp.zeta * kp.zeta};
    GeometricMoebius r = geometric_moebius(sq);
    r.squared_radicand = true;
    return r;
  }
  if (!geometric_check(std::vector<RatFunc>(c.begin() + 1, c.end())))
    throw Error(Errc::invalid_argument, "c_1, ..., c_{n-1} is not a geometric sequence");
  const RatFunc& c0 = c[0];
  const RatFunc& c1 = c[1];
  const RatFunc& c2 = c[2];
  const RatFunc a = pow(c1, n - 1) - c0 * pow(c1, n - 3) * c2;
  const RatFunc b = c0 * pow(c1, n - 2) - pow(c2, n - 1) * kp.radicand;
  const RatFunc cc = -pow(c1, n - 3) * c2;
  const RatFunc d = pow(c1, n - 2);
  const RatFunc zeta(kp.zeta);
  GeometricMoebius out{Moebius::make(a * zeta, b, cc * zeta, d), Moebius::make(d, -b, -cc, a),
                       Moebius::identity(), false};
  out.composite = out.factor * out.inversion;

  const FiberPolynomial h = kummer_minimal_polynomial(kp);
  if (h.degree() != n) throw Error(Errc::invalid_argument, "x does not generate the Kummer extension");
  const AlgebraElement x = AlgebraElement::generator(make_modulus(h.h));
  if (!algebra_substitute(h.h, apply(out.composite, x)).is_zero() || !pow(out.composite, n).is_identity())
    throw Error(Errc::internal, "closed-form Moebius matrix failed verification");
  return out;
}

bool galois_test_cubic(const FiberPolynomial& h) {
  if (h.degree() != 3) throw Error(Errc::degree_out_of_scope, "Galois test is implemented for cubic fibers only");
  const RatFunc disc = discriminant(h.h);
  if (disc.is_zero()) throw Error(Errc::invalid_argument, "fiber polynomial is not separable");
  return is_square_up_to_constant(disc);
}

std::optional<RatFunc> sqrt_ratfunc(const RatFunc& r, const FieldPtr& field) {
  if (r.is_zero()) return RatFunc(0);
  const NfElem lc = r.num().leading();
  if (!lc.is_rational()) return std::nullopt;
  auto sc = sqrt_in_field(lc.rational_value(), field);
  if (!sc) return std::nullopt;
  auto n = sqrt_monic(r.num() * nf_inverse(lc));
  auto d = sqrt_monic(r.den());
  if (!n || !d) return std::nullopt;
  return RatFunc::make(*n * *sc, *d);
}

std::optional<int> automorphism_order(const AlgebraElement& image, int bound) {
  const AlgebraElement x = AlgebraElement::generator(image.modulus_ptr());
  AlgebraElement cur = image;
  for (int k = 1; k <= bound; ++k) {
    if (cur == x) return k;
    if (k < bound) cur = algebra_substitute(cur.rep(), image);
  }
  return std::nullopt;
}

AutomorphismRep sigma_from_roots(const FiberPolynomial& h, int sign, const FieldPtr& field) {
  if (!galois_test_cubic(h)) throw Error(Errc::not_galois, "discriminant is not a square in C(t)");
  const RatFunc disc = discriminant(h.h);
  auto s = sqrt_ratfunc(disc, field);
  if (!s) {
    const NfElem lc = disc.num().leading();
    std::string need = lc.is_rational() ? " (use --field " + std::to_string(sqrt_conductor(lc.rational_value())) + ")" : "";
    throw Error(Errc::field_too_small, "sqrt of the discriminant constant " + lc.to_string() + " is not in " +
                                           (field ? field->label : std::string("Q")) + need);
  }
  const ModulusPtr mod = make_modulus(h.h);
  const AlgebraElement x = AlgebraElement::generator(mod);
  const AlgebraElement inv = algebra_inverse(algebra_substitute(derivative(h.h), x));
  const RatFunc e1 = -h.h.coeff(2);
  AlgebraElement img = RatFunc(Rational(1, 2)) *
                       (AlgebraElement::constant(mod, e1) - x + RatFunc(sign < 0 ? -1 : 1) * *s * inv);
  if (!algebra_substitute(h.h, img).is_zero()) throw Error(Errc::internal, "sigma(x) is not a root of h");
  auto order = automorphism_order(img, 3);
  if (!order || *order != 3) throw Error(Errc::internal, "sigma does not have order 3");
  return {img, *order};
}

AutomorphismRep kummer_automorphism(const KummerPresentation& kp, const FiberPolynomial& h) {
  validate(kp);
  const int n = kp.n;
  if (h.degree() != n) throw Error(Errc::invalid_argument, "x does not generate the Kummer extension");
  std::vector<RatFunc> yn(static_cast<std::size_t>(n) + 1, RatFunc(0));
  yn[0] = -kp.radicand;
  yn[static_cast<std::size_t>(n)] = RatFunc(1);
  const ModulusPtr theta_mod = make_modulus(KPoly(std::move(yn)));
  const AlgebraElement xt = AlgebraElement::from_coordinates(theta_mod, kp.coeffs);
  std::vector<AlgebraElement> powers{AlgebraElement::constant(theta_mod, RatFunc(1))};
  for (int j = 1; j < n; ++j) powers.push_back(powers.back() * xt);
  std::vector<RatFunc> target;
  NfElem zi(1);
  for (int i = 0; i < n; ++i) {
    target.push_back(kp.coeffs[static_cast<std::size_t>(i)] * RatFunc(zi));
    zi *= kp.zeta;
  }
  auto w = solve(coordinate_matrix(powers), target);
  if (!w) throw Error(Errc::internal, "powers of x are not a basis");
  AlgebraElement img = AlgebraElement::from_coordinates(make_modulus(h.h), *w);
  if (!algebra_substitute(h.h, img).is_zero()) throw Error(Errc::internal, "sigma(x) is not a root of h");
  auto order = automorphism_order(img, n);
  if (!order || *order != n) throw Error(Errc::internal, "sigma does not have order n");
  return {img, *order};
}

KummerPresentation resolvent_kummer_generator(const AutomorphismRep& sigma, const NfElem& omega) {
  if (sigma.order != 3) throw Error(Errc::invalid_argument, "resolvent needs an automorphism of order 3");
  if (!pow(omega, 3).is_one() || omega.is_one()) throw Error(Errc::invalid_argument, "omega must be a primitive cube root of unity");
  const auto& mod = sigma.image.modulus_ptr();
  const AlgebraElement x = AlgebraElement::generator(mod);
  const AlgebraElement s1 = sigma.image;
  const AlgebraElement s2 = algebra_substitute(s1.rep(), s1);
  const AlgebraElement r = x + RatFunc(omega * omega) * s1 + RatFunc(omega) * s2;
  if (r.is_zero()) throw Error(Errc::degenerate_resolvent, "Lagrange resolvent vanishes; use the other generator");
  const AlgebraElement r2 = r * r;
  const AlgebraElement r3 = r2 * r;
  if (r3.rep().degree() > 0) throw Error(Errc::internal, "cube of the resolvent is not in K");
  auto c = solve(coordinate_matrix({AlgebraElement::constant(mod, RatFunc(1)), r, r2}), x.coordinates());
  if (!c) throw Error(Errc::internal, "1, r, r^2 is not a basis");
  return KummerPresentation{3, r3.rep().coeff(0), *c, omega};
}

MoebiusRepresentation moebius_representation(const AutomorphismRep& sigma) {
  const auto& mod = sigma.image.modulus_ptr();
  const AlgebraElement x = AlgebraElement::generator(mod);
  const AlgebraElement& sx = sigma.image;
  // unknowns (alpha, beta, gamma, delta)
  Matrix<RatFunc> sys = coordinate_matrix({x, AlgebraElement::constant(mod, RatFunc(1)), x * sx, sx});
  for (auto& row : sys) {
    row[0] = -row[0];
    row[1] = -row[1];
  }
  auto basis = nullspace(sys, 4);
  if (basis.empty()) throw Error(Errc::no_moebius, "no Moebius representation of sigma");
  std::vector<std::vector<RatFunc>> candidates = basis;
  if (basis.size() > 1) {
    std::vector<RatFunc> sum(4, RatFunc(0));
    for (const auto& v : basis)
      for (std::size_t i = 0; i < 4; ++i) sum[i] += v[i];
    candidates.push_back(sum);
  }
  for (const auto& v : candidates) {
    if ((v[0] * v[3] - v[1] * v[2]).is_zero()) continue;
    Moebius m = Moebius::make(v[0], v[1], v[2], v[3]);
    if (!(apply(m, x) == sx)) throw Error(Errc::internal, "Moebius solution does not reproduce sigma");
    if (sigma.order > 0 && !pow(m, sigma.order).is_identity())
      throw Error(Errc::internal, "Moebius solution has the wrong order");
    return {m, static_cast<int>(basis.size())};
  }
  throw Error(Errc::no_moebius, "every Moebius solution is singular");
}

}  // namespace gp
