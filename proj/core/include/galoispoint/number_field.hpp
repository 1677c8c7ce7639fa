#pragma once

// Exact coefficient field k' = Q[z]/(m(z)).
//
// The ground field of the geometry is C; every computation here only needs
// rationals and a few roots of unity, so each instance runs over the smallest
// cyclotomic field that contains them.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galoispoint/rational.hpp"
#include "galoispoint/unipoly.hpp"

namespace gp {

struct NumberFieldCtx {
  std::vector<Rational> modulus;  // monic, ascending, size = degree + 1
  std::string label;
  int cyclotomic_order = 0;       // n if modulus is the n-th cyclotomic polynomial

  int degree() const { return static_cast<int>(modulus.size()) - 1; }
};

using FieldPtr = std::shared_ptr<const NumberFieldCtx>;

/// Checks that `modulus` is monic of degree >= 1 and squarefree.
/// Irreducibility is trusted.
FieldPtr make_number_field(std::vector<Rational> modulus, std::string label);

/// Q[z]/(Phi_n(z)); z is a primitive n-th root of unity.
FieldPtr make_cyclotomic(int n);

UniPoly<Rational> cyclotomic_polynomial(int n);

/// An element of k'. An element without a field is a plain rational and
/// combines with elements of any field.
class NfElem {
 public:
  NfElem() : c_{Rational(0)} {}
  NfElem(long v) : c_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  NfElem(Rational v) : c_{std::move(v)} {}  // NOLINT(google-explicit-constructor)
  NfElem(FieldPtr field, std::vector<Rational> coeffs);

  /// The class of z.
  static NfElem generator(const FieldPtr& field);

  const FieldPtr& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws unless is_rational().
  Rational rational_value() const;
  /// Coefficient of z^i in the power basis.
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  /// Power-basis coordinates padded to the field degree (length 1 for Q).
  std::vector<Rational> coordinates() const;

  NfElem& operator+=(const NfElem& o);
  NfElem& operator-=(const NfElem& o);
  NfElem& operator*=(const NfElem& o);
  NfElem& operator/=(const NfElem& o);

  friend NfElem operator+(NfElem a, const NfElem& b) { return a += b; }
  friend NfElem operator-(NfElem a, const NfElem& b) { return a -= b; }
  friend NfElem operator*(NfElem a, const NfElem& b) { return a *= b; }
  friend NfElem operator/(NfElem a, const NfElem& b) { return a /= b; }
  friend NfElem operator-(NfElem a);
  friend bool operator==(const NfElem& a, const NfElem& b);

  /// "3/2", "z", "(1 + 2*z)".
  std::string to_string() const;

 private:
  void reduce();
  void adopt(const NfElem& o);

  FieldPtr f_;
  std::vector<Rational> c_;
};

inline bool is_zero(const NfElem& a) { return a.is_zero(); }
inline std::string to_string(const NfElem& a) { return a.to_string(); }

/// Inverse via the extended Euclidean algorithm against m(z).
NfElem nf_inverse(const NfElem& a);

NfElem pow(const NfElem& a, long e);

/// zeta_field^(N/order) for a cyclotomic field of order N; requires order | N.
NfElem root_of_unity(const FieldPtr& field, int order);

/// Square root of a rational inside a cyclotomic field, built from quadratic
/// Gauss sums. nullopt when the root does not lie in the field.
std::optional<NfElem> sqrt_in_field(const Rational& r, const FieldPtr& field);

/// Smallest N such that sqrt(r) lies in Q(zeta_N).
int sqrt_conductor(const Rational& r);

}  // namespace gp
