#include "galoispoint/error.hpp"

namespace gp {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::reducible_modulus: return "reducible_modulus";
    case Errc::chart_degenerate: return "chart_degenerate";
    case Errc::degree_out_of_scope: return "degree_out_of_scope";
    case Errc::not_galois: return "not_galois";
    case Errc::degenerate_resolvent: return "degenerate_resolvent";
    case Errc::no_moebius: return "no_moebius";
    case Errc::field_too_small: return "field_too_small";
    case Errc::malformed_map: return "malformed_map";
    case Errc::parse_error: return "parse_error";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace gp
