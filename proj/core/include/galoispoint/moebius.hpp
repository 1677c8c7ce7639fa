#pragma once

#include <array>
#include <optional>
#include <string>

#include "galoispoint/algebra.hpp"

namespace gp {

/// Element of PGL_2(K) acting by u -> (a u + b) / (c u + d). Stored scaled so
/// the first nonzero entry (in the order a, b, c, d) is 1.
class Moebius {
 public:
  /// Throws Errc::invalid_argument when ad - bc = 0.
  static Moebius make(const RatFunc& a, const RatFunc& b, const RatFunc& c, const RatFunc& d);
  static Moebius identity();

  const RatFunc& a() const { return e_[0]; }
  const RatFunc& b() const { return e_[1]; }
  const RatFunc& c() const { return e_[2]; }
  const RatFunc& d() const { return e_[3]; }
  const std::array<RatFunc, 4>& entries() const { return e_; }
  RatFunc det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  bool is_identity() const;

  friend Moebius operator*(const Moebius& m, const Moebius& n);
  friend bool operator==(const Moebius& m, const Moebius& n) { return m.e_ == n.e_; }

  std::string to_string() const;

 private:
  explicit Moebius(std::array<RatFunc, 4> e) : e_(std::move(e)) {}
  std::array<RatFunc, 4> e_;
};

Moebius inverse(const Moebius& m);
Moebius pow(const Moebius& m, long e);
/// Least k in [1, bound] with m^k = id.
std::optional<int> moebius_order(const Moebius& m, int bound);
/// m == n or m == n^-1; the two choices of generator of a cyclic group.
bool equal_up_to_generator_swap(const Moebius& m, const Moebius& n);
/// Conjugation by u -> 1/u.
Moebius chart_transfer(const Moebius& m);
/// (a x + b) / (c x + d) in A; throws Errc::reducible_modulus if c x + d is not a unit.
AlgebraElement apply(const Moebius& m, const AlgebraElement& x);

}  // namespace gp
