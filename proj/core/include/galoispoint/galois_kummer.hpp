#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galoispoint/moebius.hpp"
#include "galoispoint/plane_curve.hpp"

namespace gp {

/// x = sum c_i theta^i with theta^n = q, sigma(theta) = zeta theta.
struct KummerPresentation {
  int n = 0;
  RatFunc radicand;
  std::vector<RatFunc> coeffs;  // c_0 .. c_{n-1}
  NfElem zeta;
};

struct KummerCertificate {
  bool irreducible = false;
  std::string detail;
};

/// Y^n - q is irreducible over C(t) iff q is not a p-th power for each prime p | n.
KummerCertificate kummer_certificate(const RatFunc& q, int n);

/// Throws Errc::invalid_argument when n < 3, the coefficient count is wrong,
/// zeta^n != 1, q fails the certificate or x lies in K.
void validate(const KummerPresentation& kp);

/// Minimal polynomial of x over K: squarefree part of Res_Y(Y^n - q, X - sum c_i Y^i).
/// `diagnostic` receives "non-generating" when its degree is below n.
FiberPolynomial kummer_minimal_polynomial(const KummerPresentation& kp, std::string* diagnostic = nullptr);

/// c_{i+1} c_{i-1} = c_i^2 for interior i, given (c_1, ..., c_{n-1}).
bool geometric_check(const std::vector<RatFunc>& c);

struct GeometricMoebius {
  Moebius factor;     // sigma(x) as a function of theta
  Moebius inversion;  // theta as a function of x
  Moebius composite;  // factor * inversion
  bool squared_radicand = false;  // c_1 = 0 was handled through q^2
};

/// Closed-form Moebius matrix of sigma when c_1, ..., c_{n-1} is geometric.
/// Verifies h(M(x)) = 0 and M^n scalar before returning.
GeometricMoebius geometric_moebius(const KummerPresentation& kp);

/// disc(h) is a square in C(t); requires deg h = 3.
bool galois_test_cubic(const FiberPolynomial& h);

/// sqrt(r) in k'(t) when r = const * square and sqrt(const) lies in `field`.
std::optional<RatFunc> sqrt_ratfunc(const RatFunc& r, const FieldPtr& field);

/// sigma as the image of the generator x in A = K[X]/(h).
struct AutomorphismRep {
  AlgebraElement image;
  int order = 0;
};

/// Least k in [1, bound] with sigma^k(x) = x.
std::optional<int> automorphism_order(const AlgebraElement& image, int bound);

/// sigma(x) = ((e1 - x) + sign * sqrt(disc) / h'(x)) / 2 for a Galois cubic.
/// Throws Errc::field_too_small when sqrt(disc) needs a larger field.
AutomorphismRep sigma_from_roots(const FiberPolynomial& h, int sign, const FieldPtr& field);

/// sigma from Kummer data expressed in the basis 1, x, ..., x^(n-1).
AutomorphismRep kummer_automorphism(const KummerPresentation& kp, const FiberPolynomial& h);

/// Lagrange resolvent r = x + omega^2 sigma(x) + omega sigma^2(x); q = r^3.
KummerPresentation resolvent_kummer_generator(const AutomorphismRep& sigma, const NfElem& omega);

struct MoebiusRepresentation {
  Moebius m;
  int solution_dimension = 0;
};

/// Solves (gamma x + delta) sigma(x) = alpha x + beta in A.
/// Throws Errc::no_moebius when no invertible solution exists.
MoebiusRepresentation moebius_representation(const AutomorphismRep& sigma);

}  // namespace gp
