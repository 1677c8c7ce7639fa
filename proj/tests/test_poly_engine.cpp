#include "doctest.h"

#include "galoispoint/algebra.hpp"
#include "galoispoint/linalg.hpp"
#include "properties.hpp"

using namespace gp;

namespace {

using QPoly = UniPoly<Rational>;

QPoly qp(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(v);
}

// Determinant by Laplace expansion along the first row.
template <class R>
R laplace(const std::vector<std::vector<R>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  R acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<R>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<R> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const R term = m[0][j] * laplace(minor);
    if (j % 2)
      acc = acc - term;
    else
      acc = acc + term;
  }
  return acc;
}

// Sylvester matrix written out directly from the definition.
template <class R>
std::vector<std::vector<R>> sylvester_oracle(const UniPoly<R>& f, const UniPoly<R>& g) {
  const int m = f.degree(), n = g.degree();
  std::vector<std::vector<R>> s(static_cast<std::size_t>(m + n), std::vector<R>(static_cast<std::size_t>(m + n), R(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = f.coeff(static_cast<std::size_t>(m - k));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] = g.coeff(static_cast<std::size_t>(n - k));
  return s;
}

}  // namespace

TEST_CASE("division with remainder") {
  const QPoly a = qp({-1, 0, 0, 1}), b = qp({-1, 1});
  auto dm = divmod(a, b);
  CHECK(dm.quotient == qp({1, 1, 1}));
  CHECK(dm.remainder.is_zero());
  CHECK(divmod(qp({1, 0, 1}), b).remainder == qp({2}));
  CHECK_THROWS_AS(divmod(a, QPoly()), Error);
}

TEST_CASE("gcd and extended gcd") {
  const QPoly f = qp({-1, 1}) * qp({2, 1}), g = qp({-1, 1}) * qp({3, 1});
  CHECK(gcd(f, g) == qp({-1, 1}));
  auto x = xgcd(f, g);
  CHECK(x.u * f + x.v * g == x.gcd);
  CHECK(x.gcd == qp({-1, 1}));
}

TEST_CASE("squarefree decomposition") {
  const QPoly p1 = qp({-1, 1}), p2 = qp({-2, 1}), p3 = qp({3, 1});
  const QPoly f = qp({5}) * p1 * pow(p2, 2) * pow(p3, 3);
  auto dec = squarefree_decomposition(f);
  REQUIRE(dec.size() == 3);
  CHECK(dec[0].factor == p1);
  CHECK(dec[0].multiplicity == 1);
  CHECK(dec[1].factor == p2);
  CHECK(dec[1].multiplicity == 2);
  CHECK(dec[2].factor == p3);
  CHECK(dec[2].multiplicity == 3);
  CHECK(squarefree_part(f) == p1 * p2 * p3);
}

TEST_CASE("resultant matches the Sylvester determinant oracle") {
  testing::Gen g;
  for (int i = 0; i < 40; ++i) {
    const QPoly f = g.rational_poly(4), h = g.rational_poly(4);
    if (f.degree() < 1 || h.degree() < 1) continue;
    CHECK(resultant(f, h) == laplace(sylvester_oracle(f, h)));
  }
  // Res(x - a, x - b) = a - b... up to the sign convention: Res(f, g) = prod g(roots of f)
  CHECK(resultant(qp({-2, 1}), qp({-5, 1})) == Rational(-3));
}

TEST_CASE("discriminant of depressed cubics matches -4p^3 - 27q^2") {
  testing::Gen g;
  for (int i = 0; i < 30; ++i) {
    const Rational p = g.rational(), q = g.rational();
    const QPoly f({q, p, Rational(0), Rational(1)});
    CHECK(discriminant(f) == -4 * p * p * p - 27 * q * q);
  }
}

TEST_CASE("resultant over K[X] equals the characteristic polynomial oracle") {
  // x = y + y^2 with y^3 = t; multiplication by x on 1, y, y^2.
  const RatFunc t = RatFunc::t();
  const KPoly X = KPoly::variable();
  const std::vector<std::vector<RatFunc>> mx{{0, t, t}, {1, 0, t}, {1, 1, 0}};
  std::vector<std::vector<KPoly>> charmat(3, std::vector<KPoly>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) charmat[i][j] = (i == j ? X : KPoly()) - KPoly(mx[i][j]);
  const KPoly oracle = laplace(charmat);

  std::vector<KPoly> f(4), gy(3);
  f[0] = KPoly(-t);
  f[3] = KPoly(RatFunc(1));
  gy[0] = X;
  gy[1] = KPoly(RatFunc(-1));
  gy[2] = KPoly(RatFunc(-1));
  const KPoly res = resultant(UniPoly<KPoly>(f), UniPoly<KPoly>(gy));
  CHECK(res == oracle);
  CHECK(res == KPoly({-t * t - t, RatFunc(-3) * t, RatFunc(0), RatFunc(1)}));
}

TEST_CASE("resultant multiplicativity [property]") {
  auto r = testing::resultant_multiplicativity(120);
  CHECK(r.cases >= 100);
  for (const auto& f : r.failures) FAIL_CHECK(f);
}

TEST_CASE("quotient algebra arithmetic") {
  const RatFunc t = RatFunc::t();
  const ModulusPtr mod = make_modulus(KPoly({-t, RatFunc(0), RatFunc(0), RatFunc(1)}));
  const AlgebraElement x = AlgebraElement::generator(mod);
  CHECK(pow(x, 3) == AlgebraElement::constant(mod, t));
  const AlgebraElement inv = algebra_inverse(x);
  CHECK(inv == (RatFunc(1) / t) * (x * x));
  CHECK(x * inv == AlgebraElement::constant(mod, RatFunc(1)));
  const AlgebraElement y = x + AlgebraElement::constant(mod, RatFunc(1));
  CHECK(algebra_inverse(y) * y == AlgebraElement::constant(mod, RatFunc(1)));
  CHECK(x.coordinates() == std::vector<RatFunc>{RatFunc(0), RatFunc(1), RatFunc(0)});
  CHECK_THROWS_AS(algebra_inverse(AlgebraElement::constant(mod, RatFunc(0))), Error);
}

TEST_CASE("inversion detects a reducible modulus") {
  const ModulusPtr mod = make_modulus(KPoly({RatFunc(-1), RatFunc(0), RatFunc(1)}));
  const AlgebraElement x = AlgebraElement::generator(mod);
  try {
    algebra_inverse(x - AlgebraElement::constant(mod, RatFunc(1)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::reducible_modulus);
  }
  CHECK_THROWS_AS(make_modulus(KPoly({RatFunc(1), RatFunc(2)})), Error);
}

TEST_CASE("linear algebra over K") {
  const RatFunc t = RatFunc::t();
  Matrix<RatFunc> a{{t, RatFunc(1)}, {RatFunc(1), t}};
  auto x = solve(a, std::vector<RatFunc>{RatFunc(1), RatFunc(0)});
  REQUIRE(x.has_value());
  CHECK(t * (*x)[0] + (*x)[1] == RatFunc(1));
  CHECK((*x)[0] + t * (*x)[1] == RatFunc(0));
  Matrix<RatFunc> s{{RatFunc(1), t}, {RatFunc(2), RatFunc(2) * t}};
  CHECK_FALSE(solve(s, std::vector<RatFunc>{RatFunc(1), RatFunc(0)}).has_value());
  auto ns = nullspace(s, 2);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] + t * ns[0][1] == RatFunc(0));
}
