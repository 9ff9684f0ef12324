#pragma once

#include <string_view>

#include "hw/ring.hpp"

namespace hw {

/// Field spec grammar: "f2-rational" or "gf2:<n>:<modulus bits, msb first>".
Field parse_field_spec(std::string_view spec);

/// Polynomial expressions over the presentation's generators with +, *, ^, /,
/// parentheses and integer literals (reduced mod 2). The base-field
/// indeterminate is spelled u (or w for GF(2^n) generators). Division is by
/// verified units. Errors carry the offending position.
RingElem parse_element(const Presentation& p, const Field& f, std::string_view input);

/// Scalar-only expression (no ring generators).
FieldElem parse_scalar(const Field& f, std::string_view input);

}  // namespace hw
