#pragma once

// Shorthand for building test inputs from text.

#include <string_view>

#include "galoispoint/expr.hpp"
#include "galoispoint/plane_curve.hpp"

namespace gp::testing {

inline TriPoly form(std::string_view s, const FieldPtr& f = nullptr) { return to_form(parse_fraction(s), f); }
inline TriPoly affine(std::string_view s, const FieldPtr& f = nullptr) { return to_affine(parse_fraction(s), f); }
inline KPoly kpoly(std::string_view s, const FieldPtr& f = nullptr) { return to_kpoly(parse_fraction(s), f); }
inline RatFunc ratfunc(std::string_view s, const FieldPtr& f = nullptr) { return to_ratfunc(parse_fraction(s), f); }

inline FiberPolynomial fiber(std::string_view s, const FieldPtr& f = nullptr) {
  FiberPolynomial h;
  h.h = kpoly(s, f);
  h.original_leading = RatFunc(1);
  return h;
}

inline ProjPoint point(long a, long b, long c) { return {NfElem(a), NfElem(b), NfElem(c)}; }

}  // namespace gp::testing
