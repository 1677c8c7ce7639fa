#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// runner. Each returns the number of cases checked and collects failures.

#include <random>
#include <string>
#include <vector>

#include "galoispoint/dejonquieres.hpp"
#include "galoispoint/galois_kummer.hpp"

namespace gp::testing {

inline constexpr unsigned kSeed = 20240917;

struct PropertyResult {
  int cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

class Gen {
 public:
  explicit Gen(unsigned seed = kSeed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational() {
    Rational r(integer(-9, 9), integer(1, 5));
    r.canonicalize();
    return r;
  }

  NfElem element(const FieldPtr& f) {
    std::vector<Rational> c;
    for (int i = 0; i < f->degree(); ++i) c.push_back(rational());
    return NfElem(f, c);
  }

  NfElem nonzero_element(const FieldPtr& f) {
    for (;;) {
      NfElem e = element(f);
      if (!e.is_zero()) return e;
    }
  }

  UniPoly<Rational> rational_poly(int max_degree) {
    std::vector<Rational> c;
    const long d = integer(0, max_degree);
    for (long i = 0; i <= d; ++i) c.push_back(Rational(integer(-5, 5)));
    return UniPoly<Rational>(c);
  }

  NfPoly nf_poly(const FieldPtr& f, int max_degree, bool integral = true) {
    std::vector<NfElem> c;
    const long d = integer(0, max_degree);
    for (long i = 0; i <= d; ++i) {
      if (integral)
        c.emplace_back(integer(-3, 3));
      else
        c.push_back(element(f));
    }
    return NfPoly(c);
  }

  RatFunc ratfunc(const FieldPtr& f, int max_degree) {
    NfPoly den;
    while (den.is_zero()) den = nf_poly(f, max_degree);
    return RatFunc::make(nf_poly(f, max_degree, false), den);
  }

  Moebius moebius(const FieldPtr& f, int max_degree) {
    for (;;) {
      RatFunc a = ratfunc(f, max_degree), b = ratfunc(f, max_degree);
      RatFunc c = ratfunc(f, max_degree), d = ratfunc(f, max_degree);
      if (!(a * d - b * c).is_zero()) return Moebius::make(a, b, c, d);
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

inline PropertyResult field_axioms(const FieldPtr& f, int cases) {
  PropertyResult r;
  Gen g;
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const NfElem a = g.element(f), b = g.element(f), c = g.element(f);
    const std::string at = "case " + std::to_string(i) + " in " + f->label + ": ";
    if (!((a + b) + c == a + (b + c))) r.failures.push_back(at + "addition not associative");
    if (!((a * b) * c == a * (b * c))) r.failures.push_back(at + "multiplication not associative");
    if (!(a * b == b * a)) r.failures.push_back(at + "multiplication not commutative");
    if (!(a * (b + c) == a * b + a * c)) r.failures.push_back(at + "not distributive");
    if (!((a - a).is_zero())) r.failures.push_back(at + "a - a != 0");
    if (!a.is_zero() && !(a * nf_inverse(a)).is_one()) r.failures.push_back(at + "a * a^-1 != 1");
  }
  return r;
}

inline PropertyResult resultant_multiplicativity(int cases) {
  PropertyResult r;
  Gen g;
  const FieldPtr qi = make_cyclotomic(4);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const auto f = g.rational_poly(3), gg = g.rational_poly(3), h = g.rational_poly(3);
    if (f.degree() < 1 || gg.degree() < 1 || h.degree() < 1) {
      --r.cases;
      --i;
      continue;
    }
    const Rational lhs = resultant(f * gg, h);
    const Rational rhs = resultant(f, h) * resultant(gg, h);
    if (lhs != rhs) r.failures.push_back("Res(fg, h) != Res(f, h) Res(g, h) in case " + std::to_string(i));
    // and over Q(i)
    const NfPoly a = g.nf_poly(qi, 2, false), b = g.nf_poly(qi, 2, false), c = g.nf_poly(qi, 2, false);
    if (a.degree() < 1 || b.degree() < 1 || c.degree() < 1) continue;
    if (!(resultant(a * b, c) == resultant(a, c) * resultant(b, c)))
      r.failures.push_back("multiplicativity over Q(i) fails in case " + std::to_string(i));
  }
  return r;
}

inline PropertyResult moebius_group_axioms(int cases) {
  PropertyResult r;
  Gen g;
  const FieldPtr f = make_cyclotomic(3);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const Moebius a = g.moebius(f, 1), b = g.moebius(f, 1), c = g.moebius(f, 1);
    const std::string at = "case " + std::to_string(i) + ": ";
    if (!((a * b) * c == a * (b * c))) r.failures.push_back(at + "composition not associative");
    if (!(a * Moebius::identity() == a) || !(Moebius::identity() * a == a))
      r.failures.push_back(at + "identity is not neutral");
    if (!(a * inverse(a)).is_identity()) r.failures.push_back(at + "M M^-1 != id");
    if (!(chart_transfer(chart_transfer(a)) == a)) r.failures.push_back(at + "chart transfer not involutive");
  }
  return r;
}

inline PropertyResult lift_homomorphism(int cases) {
  PropertyResult r;
  Gen g;
  const FieldPtr f = make_cyclotomic(3);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const Moebius m = g.moebius(f, 1), n = g.moebius(f, 1);
    const DeJonquieresMap lm = dejonquieres_lift(m), ln = dejonquieres_lift(n);
    const std::string at = "case " + std::to_string(i) + ": ";
    if (!same_map(dejonquieres_lift(m * n).components(), dj_compose(lm, ln).components()))
      r.failures.push_back(at + "lift(MN) != lift(M) o lift(N)");
    if (!(lm.moebius() == m)) r.failures.push_back(at + "lift does not induce M on the fiber");
    if (!rho_restriction_trivial(lm.components())) r.failures.push_back(at + "lift moves the pencil");
  }
  return r;
}

inline PropertyResult fiber_curve_round_trip(int cases) {
  PropertyResult r;
  Gen g;
  const FieldPtr f = make_cyclotomic(3);
  int attempts = 0;
  while (r.cases < cases && attempts < 20 * cases) {
    ++attempts;
    const int n = static_cast<int>(g.integer(2, 4));
    std::vector<RatFunc> c;
    for (int k = 0; k < n; ++k) c.push_back(RatFunc(g.nf_poly(f, 2)));
    c.push_back(RatFunc(1));
    if (c.front().is_zero()) continue;
    FiberPolynomial h;
    h.h = KPoly(c);
    h.original_leading = RatFunc(1);
    try {
      const PlaneCurve curve = curve_from_fiber(h);
      const PointedCurve pc = normalize_chart(curve, {NfElem(0), NfElem(0), NfElem(1)});
      ++r.cases;
      if (!(fiber_polynomial(pc).h == h.h))
        r.failures.push_back("round trip fails for h = " + to_string(h.h, "x"));
    } catch (const Error& e) {
      // not squarefree or degree below 3: not a plane curve model
      if (e.code() != Errc::invalid_argument) r.failures.push_back(std::string("unexpected error: ") + e.what());
    }
  }
  if (r.cases < cases) r.failures.push_back("too few valid cases generated");
  return r;
}

inline PropertyResult resolvent_round_trip(int cases) {
  PropertyResult r;
  Gen g;
  const FieldPtr f = make_cyclotomic(3);
  const NfElem omega = root_of_unity(f, 3);
  int attempts = 0;
  while (r.cases < cases && attempts < 20 * cases) {
    ++attempts;
    // Galois cubics from random Kummer data
    const NfPoly den = g.nf_poly(f, 1);
    if (den.is_zero()) continue;
    const RatFunc q = RatFunc(g.nf_poly(f, 3)) / RatFunc(den);
    if (!kummer_certificate(q, 3).irreducible) continue;
    KummerPresentation kp{3, q, {}, omega};
    for (int i = 0; i < 3; ++i) kp.coeffs.push_back(RatFunc(g.nf_poly(f, 1)));
    if (kp.coeffs[1].is_zero() && kp.coeffs[2].is_zero()) continue;
    const FiberPolynomial h = kummer_minimal_polynomial(kp);
    if (h.degree() != 3) continue;
    ++r.cases;
    try {
      if (!galois_test_cubic(h)) {
        r.failures.push_back("Kummer cubic not detected as Galois: " + to_string(h.h, "x"));
        continue;
      }
      AutomorphismRep s = sigma_from_roots(h, 1, f);
      KummerPresentation back;
      try {
        back = resolvent_kummer_generator(s, omega);
      } catch (const Error& e) {
        if (e.code() != Errc::degenerate_resolvent) throw;
        back = resolvent_kummer_generator(sigma_from_roots(h, -1, f), omega);
      }
      if (!(kummer_minimal_polynomial(back).h == h.h))
        r.failures.push_back("resolvent round trip fails for " + to_string(h.h, "x"));
    } catch (const Error& e) {
      r.failures.push_back(std::string("error on ") + to_string(h.h, "x") + ": " + e.what());
    }
  }
  if (r.cases < cases) r.failures.push_back("too few valid cases generated");
  return r;
}

}  // namespace gp::testing
