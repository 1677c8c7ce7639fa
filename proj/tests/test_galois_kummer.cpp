#include "doctest.h"

#include "fixtures.hpp"
#include "galoispoint/galois_kummer.hpp"
#include "properties.hpp"

using namespace gp;
using testing::fiber;
using testing::kpoly;
using testing::ratfunc;

namespace {

const FieldPtr& qw() {
  static const FieldPtr f = make_cyclotomic(3);
  return f;
}

NfElem omega() { return root_of_unity(qw(), 3); }

AlgebraElement gen(const FiberPolynomial& h) { return AlgebraElement::generator(make_modulus(h.h)); }

}  // namespace

TEST_CASE("Kummer irreducibility certificate") {
  CHECK(kummer_certificate(ratfunc("t^4 + 1"), 4).irreducible);
  CHECK(kummer_certificate(ratfunc("t"), 3).irreducible);
  CHECK(kummer_certificate(ratfunc("1/t^3"), 4).irreducible);
  CHECK_FALSE(kummer_certificate(ratfunc("t^3"), 3).irreducible);
  CHECK_FALSE(kummer_certificate(ratfunc("t^2*(t + 1)^2"), 4).irreducible);
  CHECK(kummer_certificate(ratfunc("t^2*(t + 1)^2"), 3).irreducible);
  CHECK_FALSE(kummer_certificate(ratfunc("8"), 3).irreducible);
}

TEST_CASE("validation of Kummer data") {
  KummerPresentation kp{3, ratfunc("t"), {RatFunc(0), RatFunc(1), RatFunc(0)}, omega()};
  CHECK_NOTHROW(validate(kp));
  kp.n = 2;
  CHECK_THROWS_AS(validate(kp), Error);
  kp.n = 3;
  kp.zeta = NfElem(1);
  CHECK_THROWS_AS(validate(kp), Error);
  kp.zeta = omega();
  kp.coeffs = {RatFunc(1), RatFunc(0), RatFunc(0)};
  CHECK_THROWS_AS(validate(kp), Error);
  kp.coeffs = {RatFunc(0), RatFunc(1)};
  CHECK_THROWS_AS(validate(kp), Error);
}

TEST_CASE("minimal polynomials from Kummer data") {
  KummerPresentation kp{3, ratfunc("t"), {RatFunc(0), RatFunc(1), RatFunc(1)}, omega()};
  std::string diag;
  const FiberPolynomial h = kummer_minimal_polynomial(kp, &diag);
  CHECK(h.h == kpoly("x^3 - 3*t*x - t^2 - t"));
  CHECK(h.irreducibility == Irreducibility::certified);
  CHECK(diag.empty());

  kp.coeffs = {RatFunc(0), RatFunc(1), RatFunc(0)};
  CHECK(kummer_minimal_polynomial(kp).h == kpoly("x^3 - t"));
}

TEST_CASE("geometric coefficient test") {
  CHECK(geometric_check({RatFunc(1), RatFunc(1), RatFunc(1)}));
  CHECK(geometric_check({RatFunc(2), ratfunc("2*t"), ratfunc("2*t^2")}));
  CHECK_FALSE(geometric_check({RatFunc(1), RatFunc(2), RatFunc(1)}));
  CHECK_FALSE(geometric_check({RatFunc(0), RatFunc(1)}));
  CHECK(geometric_check({RatFunc(5), RatFunc(7)}));
}

TEST_CASE("closed-form Moebius matrices") {
  const NfElem w = omega();
  SUBCASE("c2 = 0 gives a shifted rotation") {
    const RatFunc c0 = ratfunc("t + 2");
    KummerPresentation kp{3, ratfunc("t"), {c0, RatFunc(3), RatFunc(0)}, w};
    const GeometricMoebius g = geometric_moebius(kp);
    CHECK(g.composite == Moebius::make(RatFunc(w), (RatFunc(1) - RatFunc(w)) * c0, RatFunc(0), RatFunc(1)));
  }
  SUBCASE("c1 = 0 passes through q^2") {
    KummerPresentation kp{3, ratfunc("t"), {RatFunc(1), RatFunc(0), RatFunc(1)}, w};
    const GeometricMoebius g = geometric_moebius(kp);
    CHECK(g.squared_radicand);
    CHECK(pow(g.composite, 3).is_identity());
  }
  SUBCASE("mixed cubic") {
    KummerPresentation kp{3, ratfunc("t"), {RatFunc(0), RatFunc(1), RatFunc(1)}, w};
    const GeometricMoebius g = geometric_moebius(kp);
    CHECK(g.factor == Moebius::make(RatFunc(w), -RatFunc::t(), -RatFunc(w), RatFunc(1)));
    CHECK(g.composite == g.factor * g.inversion);
    CHECK(moebius_order(g.composite, 6) == 3);
  }
  SUBCASE("non-geometric data is refused") {
    const FieldPtr qi = make_cyclotomic(4);
    KummerPresentation kp{4, ratfunc("t"), {RatFunc(0), RatFunc(1), RatFunc(2), RatFunc(1)}, root_of_unity(qi, 4)};
    CHECK_THROWS_AS(geometric_moebius(kp), Error);
  }
}

TEST_CASE("discriminant Galois test") {
  CHECK(galois_test_cubic(fiber("x^3 - 3*t*x - t^2 - t")));
  CHECK(galois_test_cubic(fiber("x^3 - t")));
  CHECK_FALSE(galois_test_cubic(fiber("x^3 - x - t")));
  CHECK_THROWS_AS(galois_test_cubic(fiber("x^4 - t")), Error);
  try {
    galois_test_cubic(fiber("x^4 - t"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degree_out_of_scope);
  }
  // depressed cubic oracle
  const KPoly h = kpoly("x^3 - 3*t*x - t^2 - t");
  const RatFunc p = ratfunc("-3*t"), q = ratfunc("-t^2 - t");
  CHECK(discriminant(h) == RatFunc(-4) * p * p * p - RatFunc(27) * q * q);
}

TEST_CASE("square roots in k'(t)") {
  CHECK(sqrt_ratfunc(ratfunc("4*t^2/(t + 1)^2"), nullptr) == ratfunc("2*t/(t + 1)"));
  CHECK_FALSE(sqrt_ratfunc(ratfunc("t"), qw()).has_value());
  CHECK_FALSE(sqrt_ratfunc(ratfunc("-3*t^2"), nullptr).has_value());
  auto s = sqrt_ratfunc(ratfunc("-3*t^2"), qw());
  REQUIRE(s.has_value());
  CHECK(*s * *s == ratfunc("-3*t^2"));
}

TEST_CASE("sigma from the roots of a Galois cubic") {
  const FiberPolynomial h = fiber("x^3 - t");
  const AlgebraElement x = gen(h);
  const AutomorphismRep plus = sigma_from_roots(h, 1, qw());
  const AutomorphismRep minus = sigma_from_roots(h, -1, qw());
  const NfElem w = omega();
  CHECK(plus.order == 3);
  CHECK(((plus.image == RatFunc(w) * x) || (plus.image == RatFunc(w * w) * x)));
  CHECK(algebra_substitute(plus.image.rep(), minus.image) == x);
  CHECK(automorphism_order(plus.image, 5) == 3);

  try {
    sigma_from_roots(h, 1, nullptr);
    FAIL("expected field_too_small");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::field_too_small);
  }
  try {
    sigma_from_roots(fiber("x^3 - x - t"), 1, qw());
    FAIL("expected not_galois");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_galois);
  }
}

TEST_CASE("Lagrange resolvent") {
  const FiberPolynomial h = fiber("x^3 - t");
  const AlgebraElement x = gen(h);
  const NfElem w = omega();
  const KummerPresentation kp = resolvent_kummer_generator({RatFunc(w) * x, 3}, w);
  CHECK(kp.radicand == ratfunc("27*t"));
  CHECK(kp.coeffs == std::vector<RatFunc>{RatFunc(0), RatFunc(Rational(1, 3)), RatFunc(0)});
  try {
    resolvent_kummer_generator({RatFunc(w * w) * x, 3}, w);
    FAIL("expected degenerate_resolvent");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_resolvent);
  }
  CHECK_THROWS_AS(resolvent_kummer_generator({x, 1}, w), Error);
}

TEST_CASE("Kummer automorphism in the power basis") {
  KummerPresentation kp{3, ratfunc("t"), {RatFunc(0), RatFunc(1), RatFunc(1)}, omega()};
  const FiberPolynomial h = kummer_minimal_polynomial(kp);
  const AutomorphismRep s = kummer_automorphism(kp, h);
  CHECK(s.order == 3);
  // sigma(x) is again a root of h
  CHECK(algebra_substitute(h.h, s.image).is_zero());
}

TEST_CASE("Moebius representation by linear solve") {
  const FiberPolynomial h = fiber("x^3 - t");
  const AlgebraElement x = gen(h);
  const NfElem w = omega();
  const MoebiusRepresentation mr = moebius_representation({RatFunc(w) * x, 3});
  CHECK(mr.solution_dimension == 1);
  CHECK(mr.m == Moebius::make(RatFunc(w), RatFunc(0), RatFunc(0), RatFunc(1)));

  KummerPresentation kp{3, ratfunc("t"), {RatFunc(0), RatFunc(1), RatFunc(1)}, w};
  const FiberPolynomial g = kummer_minimal_polynomial(kp);
  const MoebiusRepresentation m2 = moebius_representation(kummer_automorphism(kp, g));
  CHECK(m2.solution_dimension == 1);
  CHECK(pow(m2.m, 3).is_identity());
  CHECK(equal_up_to_generator_swap(m2.m, geometric_moebius(kp).composite));
}

TEST_CASE("resolvent round trip on Galois cubics [property]") {
  auto r = testing::resolvent_round_trip(100);
  CHECK(r.cases >= 100);
  for (const auto& f : r.failures) FAIL_CHECK(f);
}
