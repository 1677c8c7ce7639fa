#include "galoispoint/plane_curve.hpp"

#include <algorithm>

namespace gp {

const char* irreducibility_name(Irreducibility i) noexcept {
  return i == Irreducibility::certified ? "certified" : "trusted";
}

bool is_squarefree(const TriPoly& f) {
  if (f.is_zero()) return false;
  TriPoly g = bivariate_gcd(f, f.derivative(0), 1, 0);
  if (g.is_constant()) return true;
  g = bivariate_gcd(g, f.derivative(1), 1, 0);
  return g.is_constant();
}

PlaneCurve PlaneCurve::from_form(const TriPoly& phi, Irreducibility irr, std::string certificate) {
  if (!phi.is_homogeneous()) throw Error(Errc::invalid_argument, "curve form is not homogeneous");
  if (phi.total_degree() < 3) throw Error(Errc::invalid_argument, "curve degree must be at least 3");
  const TriPoly f = phi.dehomogenize(2);
  if (phi.valuation_in(2) > 1 || !is_squarefree(f))
    throw Error(Errc::invalid_argument, "curve equation is not squarefree");
  return PlaneCurve(normalize_leading(phi), irr, std::move(certificate));
}

PlaneCurve PlaneCurve::from_affine(const TriPoly& f, Irreducibility irr, std::string certificate) {
  if (f.degree_in(2) > 0) throw Error(Errc::invalid_argument, "affine curve must only involve x and y");
  return from_form(f.homogenize(2, f.total_degree()), irr, std::move(certificate));
}

int multiplicity_at(const PlaneCurve& curve, const ProjPoint& p) {
  if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero())
    throw Error(Errc::invalid_argument, "(0 : 0 : 0) is not a projective point");
  if (!curve.form().evaluate(p).is_zero()) return 0;
  std::size_t k = 2;
  if (p[2].is_zero()) k = p[0].is_zero() ? 1 : 0;
  const NfElem inv = nf_inverse(p[k]);
  std::array<TriPoly, 3> shift;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == k)
      shift[i] = TriPoly(NfElem(1));
    else
      shift[i] = TriPoly::variable(static_cast<int>(i)) + TriPoly(p[i] * inv);
  }
  return curve.form().substitute(shift).min_total_degree();
}

PlaneCurve transform_curve(const PlaneCurve& curve, const Mat3& t) {
  TriPoly phi = curve.form().substitute(mat3_forms(mat3_inverse(t)));
  return PlaneCurve::from_form(phi, curve.irreducibility(), curve.certificate());
}

PointedCurve normalize_chart(const PlaneCurve& curve, const ProjPoint& p) {
  if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero())
    throw Error(Errc::invalid_argument, "(0 : 0 : 0) is not a projective point");
  Mat3 perm = mat3_identity();
  if (p[2].is_zero()) {
    const std::size_t k = p[0].is_zero() ? 1 : 0;
    perm[k][k] = NfElem(0);
    perm[2][2] = NfElem(0);
    perm[k][2] = NfElem(1);
    perm[2][k] = NfElem(1);
  }
  ProjPoint q = mat3_apply(perm, p);
  Mat3 shear = mat3_identity();
  if (!q[0].is_zero() || !q[1].is_zero()) {
    const NfElem inv = nf_inverse(q[2]);
    shear[0][2] = -(q[0] * inv);
    shear[1][2] = -(q[1] * inv);
  }
  Mat3 t = mat3_mul(shear, perm);
  PlaneCurve moved = transform_curve(curve, t);
  const int m = multiplicity_at(curve, p);
  return PointedCurve{curve, p, m, t, std::move(moved)};
}

FiberPolynomial fiber_of_affine(const TriPoly& f) {
  if (f.is_zero()) throw Error(Errc::invalid_argument, "zero curve");
  const int m = f.min_total_degree();
  const int n = f.total_degree() - m;
  // coefficient of X^(a+b-m) collects c * t^b
  std::vector<std::vector<NfElem>> rows(static_cast<std::size_t>(n) + 1);
  for (const auto& [mono, c] : f.terms()) {
    auto& row = rows[static_cast<std::size_t>(mono[0] + mono[1] - m)];
    const auto b = static_cast<std::size_t>(mono[1]);
    if (row.size() <= b) row.resize(b + 1, NfElem(0));
    row[b] += c;
  }
  std::vector<RatFunc> coeffs;
  for (auto& row : rows) coeffs.emplace_back(NfPoly(std::move(row)));
  const RatFunc lead = coeffs.back();
  const RatFunc inv = inverse(lead);
  for (auto& c : coeffs) c *= inv;
  FiberPolynomial out;
  out.h = KPoly(std::move(coeffs));
  out.original_leading = lead;
  out.multiplicity = m;
  return out;
}

FiberPolynomial fiber_polynomial(const PointedCurve& pc) {
  const TriPoly& phi = pc.chart_curve.form();
  const int d = phi.total_degree();
  if (phi.valuation_in(0) > 0)
    throw Error(Errc::chart_degenerate, "the line x = 0 is a component of the curve; choose another chart");
  const TriPoly f = phi.dehomogenize(2);
  if (!f.coeff({0, 0, 0}).is_zero() && pc.multiplicity != 0)
    throw Error(Errc::invalid_argument, "point is not at the chart origin");
  FiberPolynomial out = fiber_of_affine(f);
  if (out.multiplicity != pc.multiplicity || out.degree() != d - pc.multiplicity)
    throw Error(Errc::chart_degenerate, "chart does not realise deg(projection) = d - m");
  if (out.h.coeffs().front().is_zero())
    throw Error(Errc::chart_degenerate, "X divides the fiber polynomial; choose another chart");
  out.irreducibility = pc.curve.irreducibility();
  out.certificate = pc.curve.certificate();
  return out;
}

PlaneCurve curve_from_fiber(const FiberPolynomial& fp) {
  const KPoly& h = fp.h;
  if (h.degree() < 1) throw Error(Errc::invalid_argument, "fiber polynomial must have positive degree");
  if (h.coeffs().front().is_zero())
    throw Error(Errc::invalid_argument, "X divides the fiber polynomial; the curve would be reducible");
  NfPoly l(NfElem(1));
  for (const auto& c : h.coeffs())
    if (!c.is_zero()) l = divexact(l * c.den(), gcd(l, c.den()));
  // Sum_k H_k(y/x) x^k with H_k = L h_k; term H_kj y^j x^(k - j + shift).
  int shift = 0;
  bool first = true;
  std::vector<NfPoly> scaled;
  for (std::size_t k = 0; k < h.coeffs().size(); ++k) {
    const RatFunc& c = h.coeffs()[k];
    scaled.push_back(c.is_zero() ? NfPoly() : c.num() * divexact(l, c.den()));
    const auto& cp = scaled.back().coeffs();
    for (std::size_t j = 0; j < cp.size(); ++j) {
      if (cp[j].is_zero()) continue;
      const int need = static_cast<int>(j) - static_cast<int>(k);
      shift = first ? need : std::max(shift, need);
      first = false;
    }
  }
  TriPoly f;
  for (std::size_t k = 0; k < scaled.size(); ++k) {
    const auto& cp = scaled[k].coeffs();
    for (std::size_t j = 0; j < cp.size(); ++j)
      f += TriPoly::monomial(cp[j], {static_cast<int>(k) - static_cast<int>(j) + shift, static_cast<int>(j), 0});
  }
  return PlaneCurve::from_affine(normalize_leading(f), fp.irreducibility, fp.certificate);
}

}  // namespace gp
