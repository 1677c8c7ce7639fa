#include "doctest.h"

#include "fixtures.hpp"
#include "galoispoint/plane_curve.hpp"
#include "properties.hpp"

using namespace gp;
using testing::affine;
using testing::form;
using testing::point;

TEST_CASE("curve validation") {
  CHECK_NOTHROW(PlaneCurve::from_form(form("X^4 - X^3*Y + Y^3*Z")));
  CHECK_THROWS_AS(PlaneCurve::from_form(form("X^4 - Y^3")), Error);
  CHECK_THROWS_AS(PlaneCurve::from_form(form("X^4 - Y^3*Z - Z")), Error);
  CHECK_THROWS_AS(PlaneCurve::from_form(form("X^2 - Y*Z")), Error);
  CHECK_THROWS_AS(PlaneCurve::from_form(form("(X - Y)^2*Z")), Error);
  CHECK_THROWS_AS(PlaneCurve::from_form(form("X^3*Z^2")), Error);
  const PlaneCurve c = PlaneCurve::from_affine(affine("x^4 - y"));
  CHECK(c.degree() == 4);
  CHECK(proportional(c.form(), form("X^4 - Y*Z^3")));
  CHECK(c.irreducibility() == Irreducibility::trusted);
}

TEST_CASE("multiplicity at a point") {
  const PlaneCurve c = PlaneCurve::from_form(form("X^4 - X^3*Y + Y^3*Z"));
  CHECK(multiplicity_at(c, point(0, 0, 1)) == 3);
  CHECK(multiplicity_at(c, point(1, 1, 0)) == 1);
  CHECK(multiplicity_at(c, point(8, -16, 3)) == 1);
  CHECK(multiplicity_at(c, point(0, 1, 0)) == 1);
  CHECK(multiplicity_at(c, point(1, 0, 0)) == 0);
  CHECK_THROWS_AS(multiplicity_at(c, point(0, 0, 0)), Error);
  const PlaneCurve cusp = PlaneCurve::from_affine(affine("y^2 - x^3"));
  CHECK(multiplicity_at(cusp, point(0, 0, 1)) == 2);
}

TEST_CASE("normalize_chart moves the point to the origin") {
  const PlaneCurve c = PlaneCurve::from_form(form("X^4 - X^3*Y + Y^3*Z"));
  for (const ProjPoint& p : {point(1, 1, 0), point(8, -16, 3), point(0, 1, 0), point(1, 0, 0), point(0, 0, 1)}) {
    const PointedCurve pc = normalize_chart(c, p);
    CHECK(same_projective_point(mat3_apply(pc.chart_transform, p), point(0, 0, 1)));
    CHECK(multiplicity_at(pc.chart_curve, point(0, 0, 1)) == pc.multiplicity);
    CHECK(pc.projection_degree() == 4 - pc.multiplicity);
  }
}

TEST_CASE("fiber polynomials of small examples") {
  const PlaneCurve flex = PlaneCurve::from_form(form("X^4 - Y^3*Z"));
  const FiberPolynomial h = fiber_polynomial(normalize_chart(flex, point(0, 1, 0)));
  CHECK(h.h == testing::kpoly("x^3 - t"));
  CHECK(h.multiplicity == 1);
  CHECK_FALSE(h.degenerate());

  const FiberPolynomial g = fiber_of_affine(affine("x^4 - x^2 - y"));
  CHECK(g.h == testing::kpoly("x^3 - x - t"));
  CHECK(g.multiplicity == 1);

  // f(x, tx) / x^m keeps the leading coefficient for later
  const FiberPolynomial k = fiber_of_affine(affine("2*x^3 - y^2"));
  CHECK(k.h == testing::kpoly("x - t^2/2"));
  CHECK(k.original_leading == RatFunc(2));
  CHECK(k.degenerate());
}

TEST_CASE("curve_from_fiber inverts the fiber construction") {
  const PlaneCurve c = curve_from_fiber(testing::fiber("x^3 - t"));
  CHECK(proportional(c.affine(), affine("x^4 - y")));
  const PlaneCurve d = curve_from_fiber(testing::fiber("x^3 - 3*t*x - t^2 - t"));
  CHECK(fiber_polynomial(normalize_chart(d, point(0, 0, 1))).h == testing::kpoly("x^3 - 3*t*x - t^2 - t"));
  CHECK_THROWS_AS(curve_from_fiber(testing::fiber("x^3 - t*x")), Error);
}

TEST_CASE("a degree 16 model with an ordinary 12-fold point") {
  const TriPoly f = affine(
      "5*x^12 - 16*x^13 + 18*x^14 - 8*x^15 + x^16 - 6*x^8*y^4 + 12*x^9*y^4"
      " - 6*x^10*y^4 + 4*x^4*y^8 - 4*x^5*y^8 - y^12");
  CHECK(f.size() == 11);
  const PlaneCurve c = PlaneCurve::from_affine(f);
  CHECK(c.degree() == 16);
  const PointedCurve pc = normalize_chart(c, point(0, 0, 1));
  CHECK(pc.multiplicity == 12);
  CHECK(pc.projection_degree() == 4);
  CHECK(fiber_polynomial(pc).degree() == 4);
}

TEST_CASE("fiber / curve round trip [property]") {
  auto r = testing::fiber_curve_round_trip(100);
  CHECK(r.cases >= 100);
  for (const auto& f : r.failures) FAIL_CHECK(f);
}
