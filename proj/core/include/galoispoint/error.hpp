#pragma once

#include <stdexcept>
#include <string>

namespace gp {

enum class Errc {
  invalid_argument,
  division_by_zero,
  reducible_modulus,   // gcd(element, modulus) != 1 in a quotient algebra
  chart_degenerate,
  degree_out_of_scope,
  not_galois,
  degenerate_resolvent,
  no_moebius,
  field_too_small,     // a needed square root is not in the coefficient field
  malformed_map,
  parse_error,
  internal,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gp
