#pragma once

// Sparse polynomials in three variables over k'. Used both for affine curve
// equations f(x, y) (third exponent zero) and for ternary forms in
// (x0 : x1 : x2) = (X : Y : Z).

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galoispoint/algebra.hpp"
#include "galoispoint/number_field.hpp"
#include "galoispoint/ratfunc.hpp"

namespace gp {

class TriPoly {
 public:
  using Mono = std::array<int, 3>;
  // Lexicographically descending, so begin() is the leading term.
  using Terms = std::map<Mono, NfElem, std::greater<Mono>>;

  TriPoly() = default;
  explicit TriPoly(NfElem c);
  static TriPoly variable(int index);
  static TriPoly monomial(NfElem c, Mono m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  NfElem coeff(const Mono& m) const;

  /// -1 for zero.
  int total_degree() const;
  /// Lowest total degree of a term; -1 for zero.
  int min_total_degree() const;
  int degree_in(int var) const;
  /// Largest power of x_var dividing every term.
  int valuation_in(int var) const;
  bool is_homogeneous() const;
  bool is_constant() const { return total_degree() <= 0; }

  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  TriPoly& operator*=(const NfElem& s);

  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator-(TriPoly a) { return a *= NfElem(-1); }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(TriPoly a, const NfElem& s) { return a *= s; }
  friend TriPoly operator*(const NfElem& s, TriPoly a) { return a *= s; }
  friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }

  NfElem evaluate(const std::array<NfElem, 3>& at) const;
  /// this(images[0], images[1], images[2]).
  TriPoly substitute(const std::array<TriPoly, 3>& images) const;
  TriPoly derivative(int var) const;
  /// Multiplies each term by x_var^(degree - term degree); requires x_var absent.
  TriPoly homogenize(int var, int degree) const;
  /// Sets x_var = 1.
  TriPoly dehomogenize(int var) const;
  /// Divides every term by x_var^k; requires divisibility.
  TriPoly shift_down(int var, int k) const;

  std::string to_string(const std::array<std::string, 3>& names) const;

 private:
  void add_term(const Mono& m, const NfElem& c);

  Terms terms_;
};

inline bool is_zero(const TriPoly& p) { return p.is_zero(); }

TriPoly pow(const TriPoly& p, unsigned e);

/// Quotient when b divides a exactly, nullopt otherwise.
std::optional<TriPoly> divide_exact(const TriPoly& a, const TriPoly& b);

/// Divides by the leading coefficient (lex leading term becomes 1).
TriPoly normalize_leading(const TriPoly& p);

/// True iff a = lambda * b for a nonzero constant lambda.
bool proportional(const TriPoly& a, const TriPoly& b);

extern const std::array<std::string, 3> kAffineNames;      // x, y, z-free
extern const std::array<std::string, 3> kProjectiveNames;  // X, Y, Z

// ---- bivariate and binary-form helpers -------------------------------------

/// Views p (free of the third variable) as a polynomial in x_main with
/// coefficients in k'(x_coeff).
KPoly to_univariate(const TriPoly& p, int main_var, int coeff_var);

/// Inverse of to_univariate for polynomial (denominator-free) coefficients.
TriPoly from_univariate(const std::vector<NfPoly>& coeffs, int main_var, int coeff_var);

/// gcd over k'[x_main, x_coeff], normalised by normalize_leading.
TriPoly bivariate_gcd(const TriPoly& a, const TriPoly& b, int main_var, int coeff_var);

/// Binary form in (x0, x1) -> univariate in x1 with x0 = 1.
NfPoly binary_dehomogenize(const TriPoly& form);
/// Univariate in x1 -> binary form of the given degree.
TriPoly binary_homogenize(const NfPoly& p, int degree);
/// gcd of binary forms in (x0, x1), normalised; zero forms are ignored.
TriPoly binary_form_gcd(const std::vector<TriPoly>& forms);

/// 3x3 matrices over k' acting on column vectors (X, Y, Z).
using Mat3 = std::array<std::array<NfElem, 3>, 3>;
using ProjPoint = std::array<NfElem, 3>;

Mat3 mat3_identity();
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
NfElem mat3_det(const Mat3& a);
/// Throws when singular.
Mat3 mat3_inverse(const Mat3& a);
ProjPoint mat3_apply(const Mat3& a, const ProjPoint& p);
/// The linear forms (row_i . (X, Y, Z)).
std::array<TriPoly, 3> mat3_forms(const Mat3& a);
bool same_projective_point(const ProjPoint& a, const ProjPoint& b);

}  // namespace gp
