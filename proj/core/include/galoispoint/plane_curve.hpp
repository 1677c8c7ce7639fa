#pragma once

#include <string>

#include "galoispoint/algebra.hpp"
#include "galoispoint/tripoly.hpp"

namespace gp {

enum class Irreducibility {
  trusted,    // user-supplied equation; not checked
  certified,  // built from Kummer data whose radicand passes the p-th power test
};

const char* irreducibility_name(Irreducibility i) noexcept;

/// Plane curve Phi(X, Y, Z) = 0 of degree >= 3 with affine chart f(x, y) = Phi(x, y, 1).
class PlaneCurve {
 public:
  /// Throws unless homogeneous of degree >= 3 and squarefree.
  static PlaneCurve from_form(const TriPoly& phi, Irreducibility irr = Irreducibility::trusted,
                              std::string certificate = {});
  /// Homogenises f(x, y) with respect to its total degree.
  static PlaneCurve from_affine(const TriPoly& f, Irreducibility irr = Irreducibility::trusted,
                                std::string certificate = {});

  const TriPoly& form() const { return form_; }
  TriPoly affine() const { return form_.dehomogenize(2); }
  int degree() const { return form_.total_degree(); }
  Irreducibility irreducibility() const { return irr_; }
  const std::string& certificate() const { return certificate_; }

 private:
  PlaneCurve(TriPoly form, Irreducibility irr, std::string certificate)
      : form_(std::move(form)), irr_(irr), certificate_(std::move(certificate)) {}

  TriPoly form_;
  Irreducibility irr_;
  std::string certificate_;
};

/// True iff gcd(f, df/dx, df/dy) is constant.
bool is_squarefree(const TriPoly& f);

/// Order of vanishing of the curve at P; 0 iff P is off the curve.
int multiplicity_at(const PlaneCurve& curve, const ProjPoint& p);

/// Image T(C): the curve Phi(T^-1 v) = 0.
PlaneCurve transform_curve(const PlaneCurve& curve, const Mat3& t);

struct PointedCurve {
  PlaneCurve curve;
  ProjPoint point;
  int multiplicity;
  Mat3 chart_transform;   // sends point to (0 : 0 : 1)
  PlaneCurve chart_curve; // transform_curve(curve, chart_transform)

  int projection_degree() const { return curve.degree() - multiplicity; }
};

/// Chooses the chart by: identity if P = (0:0:1); otherwise a coordinate swap
/// bringing a nonzero coordinate to the Z slot (Z, then X, then Y), followed
/// by the shear (x, y) -> (x - a, y - b) when P is not yet at the origin.
PointedCurve normalize_chart(const PlaneCurve& curve, const ProjPoint& p);

/// h(X, t) = f(X, tX) / X^m made monic in X over K = k'(t).
struct FiberPolynomial {
  KPoly h;
  RatFunc original_leading;  // coefficient of X^n before normalisation
  int multiplicity = 0;
  Irreducibility irreducibility = Irreducibility::trusted;
  std::string certificate;

  int degree() const { return h.degree(); }
  /// Projection degree below 2: no Galois structure to study.
  bool degenerate() const { return degree() < 2; }
};

/// Requires the point at the origin of the chart curve.
FiberPolynomial fiber_polynomial(const PointedCurve& pc);

/// Fiber polynomial of an affine f(x, y) at the origin.
FiberPolynomial fiber_of_affine(const TriPoly& f);

/// Substitutes t = y/x, X = x and clears denominators and powers of x.
PlaneCurve curve_from_fiber(const FiberPolynomial& h);

}  // namespace gp
