#pragma once

// De Jonquieres maps of P^2 preserving the pencil of lines through
// o = (0 : 0 : 1): (x0 : x1 : x2) -> (q x0 : q x1 : f) with
// f = a x2 + b, q = c x2 + d and a, b, c, d binary forms in (x0, x1).

#include <array>
#include <optional>

#include "galoispoint/moebius.hpp"
#include "galoispoint/tripoly.hpp"

namespace gp {

using Components = std::array<TriPoly, 3>;

class DeJonquieresMap {
 public:
  /// Removes the common binary factor and scales so comps()[0] has leading
  /// coefficient 1. Throws Errc::malformed_map on inconsistent degrees, a
  /// vanishing determinant ad - bc, or a map not moving x2.
  static DeJonquieresMap from_forms(TriPoly a, TriPoly b, TriPoly c, TriPoly d);
  /// Parses (q x0, q x1, f); throws Errc::malformed_map when not of that shape.
  static DeJonquieresMap from_components(const Components& comps);

  const TriPoly& a() const { return a_; }
  const TriPoly& b() const { return b_; }
  const TriPoly& c() const { return c_; }
  const TriPoly& d() const { return d_; }
  TriPoly f() const;
  TriPoly q() const;
  Components components() const;
  int degree() const { return degree_; }

  /// Action on the fiber coordinate u = x2/x0 over t = x1/x0.
  Moebius moebius() const;

 private:
  DeJonquieresMap() = default;
  TriPoly a_, b_, c_, d_;
  int degree_ = 0;
};

DeJonquieresMap dejonquieres_lift(const Moebius& m);
/// F o G.
DeJonquieresMap dj_compose(const DeJonquieresMap& f, const DeJonquieresMap& g);
DeJonquieresMap dj_inverse(const DeJonquieresMap& f);

/// Componentwise substitution F(G0, G1, G2) without any cancellation.
Components compose_components(const Components& f, const Components& g);
/// True iff comps = h (x0, x1, x2) for a nonzero form h.
bool is_identity_map(const Components& comps);
/// True iff the two triples define the same rational map.
bool same_map(const Components& a, const Components& b);

/// Composes with the lift of the inverse on both sides and checks for the identity.
bool dj_verify_birational(const DeJonquieresMap& f);
/// Least k in [1, bound] with F^k = id.
std::optional<int> dj_order(const DeJonquieresMap& f, int bound);

/// Phi o F divided by Phi, when Phi divides it.
std::optional<TriPoly> pullback_divides(const Components& f, const TriPoly& phi);
/// rho o F = rho for the projection rho from o, i.e. F0 x1 = F1 x0.
bool rho_restriction_trivial(const Components& f);

std::string to_string(const Components& comps);

}  // namespace gp
