#pragma once

#include <string>

#include "galoispoint/number_field.hpp"
#include "galoispoint/unipoly.hpp"

namespace gp {

using NfPoly = UniPoly<NfElem>;

/// Element of K = k'(t) in canonical form: coprime numerator and denominator,
/// denominator monic. Two RatFuncs are equal iff their parts are equal.
class RatFunc {
 public:
  RatFunc() : den_(NfElem(1)) {}
  RatFunc(long v) : num_(NfElem(v)), den_(NfElem(1)) {}         // NOLINT(google-explicit-constructor)
  RatFunc(NfElem v) : num_(std::move(v)), den_(NfElem(1)) {}     // NOLINT(google-explicit-constructor)
  RatFunc(Rational v) : num_(NfElem(std::move(v))), den_(NfElem(1)) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(NfPoly num) : num_(std::move(num)), den_(NfElem(1)) {}

  /// Canonical form of num/den; throws on den == 0.
  static RatFunc make(const NfPoly& num, const NfPoly& den);
  /// The parameter t.
  static RatFunc t();

  const NfPoly& num() const { return num_; }
  const NfPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Value of a constant function; throws otherwise.
  NfElem constant_value() const;
  NfElem evaluate(const NfElem& at) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(RatFunc a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Text in t and z, e.g. "t^2 + 1", "(t - 1)/(t^2)".
  std::string to_string(const std::string& var = "t") const;

 private:
  RatFunc(NfPoly num, NfPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {}

  NfPoly num_;
  NfPoly den_;
};

inline bool is_zero(const RatFunc& a) { return a.is_zero(); }
inline std::string to_string(const RatFunc& a) { return a.to_string(); }

RatFunc inverse(const RatFunc& a);
RatFunc pow(const RatFunc& a, long e);

/// Parenthesised when it has more than one term (for use as a coefficient).
std::string coeff_string(const RatFunc& a, const std::string& var = "t");

std::string to_string(const NfPoly& p, const std::string& var = "t");

}  // namespace gp
