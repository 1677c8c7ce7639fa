#pragma once

#include <gmpxx.h>

#include <string>

namespace gp {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace gp
