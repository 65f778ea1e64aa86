#pragma once

#include <string_view>
#include <vector>

#include "rstar/finite_ring.hpp"

namespace rstar {

/// Parses a ring expression:
///
///   atom := "Z/" n | "F" p "[x]/(" poly ")"
///   expr := atom ("x" atom)*
///
/// Whitespace is ignored; products associate to the left.
/// Throws std::invalid_argument naming the offending position.
RingPtr parse_ring_spec(std::string_view spec);

/// Parses a caret-notation polynomial over F_p ("x^2+x+1", "2x+1", "x^3+2*x")
/// into low-to-high coefficients with trailing zeros removed. The zero
/// polynomial parses to an empty vector.
std::vector<unsigned> parse_poly(std::string_view text, unsigned p);

}  // namespace rstar
