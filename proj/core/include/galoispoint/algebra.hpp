#pragma once

// The quotient algebra A = K[X]/(h) with K = k'(t) and h monic. When h is
// irreducible A is the function field k(C) and every nonzero element is a unit.

#include <memory>
#include <vector>

#include "galoispoint/ratfunc.hpp"
#include "galoispoint/unipoly.hpp"

namespace gp {

using KPoly = UniPoly<RatFunc>;
using ModulusPtr = std::shared_ptr<const KPoly>;

/// Shares a monic modulus; throws on a non-monic or constant polynomial.
ModulusPtr make_modulus(const KPoly& h);

class AlgebraElement {
 public:
  AlgebraElement(ModulusPtr modulus, const KPoly& rep);

  /// The class of X.
  static AlgebraElement generator(const ModulusPtr& modulus);
  static AlgebraElement constant(const ModulusPtr& modulus, const RatFunc& c);
  /// sum coords[i] X^i.
  static AlgebraElement from_coordinates(const ModulusPtr& modulus, const std::vector<RatFunc>& coords);

  const KPoly& rep() const { return rep_; }
  const KPoly& modulus() const { return *mod_; }
  const ModulusPtr& modulus_ptr() const { return mod_; }
  int dimension() const { return mod_->degree(); }
  bool is_zero() const { return rep_.is_zero(); }
  /// Power-basis coordinates, length dimension().
  std::vector<RatFunc> coordinates() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const AlgebraElement& o);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const AlgebraElement& b) { return a *= b; }
  friend AlgebraElement operator*(const RatFunc& s, AlgebraElement a) {
    a.rep_ *= s;
    return a;
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return *a.mod_ == *b.mod_ && a.rep_ == b.rep_;
  }

 private:
  void check_same(const AlgebraElement& o) const;

  ModulusPtr mod_;
  KPoly rep_;
};

/// Throws Errc::division_by_zero for 0 and Errc::reducible_modulus when the
/// representative shares a factor with the modulus.
AlgebraElement algebra_inverse(const AlgebraElement& a);

/// p(a) reduced modulo h.
AlgebraElement algebra_substitute(const KPoly& p, const AlgebraElement& a);

AlgebraElement pow(const AlgebraElement& a, unsigned e);

std::string to_string(const KPoly& p, const std::string& var = "X");

}  // namespace gp
