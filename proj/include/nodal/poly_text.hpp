#pragma once

#include <string>
#include <string_view>

#include "nodal/polynomial.hpp"

namespace nodal {

/// Parses a homogeneous form.
///
///   poly   := [sign] term (sign term)*
///   term   := coeff ('*' var)* | var ('*' var)*
///   var    := 'x' digits ['^' exponent]
///
/// Whitespace is ignored and coefficients are reduced mod p. Throws
/// ParseError with the 1-based column of the offending character, including
/// for inhomogeneous input ("mixed degrees a and b").
Polynomial parse_polynomial(const GradedRing& ring, std::string_view text);

/// Canonical text: terms in decreasing monomial order joined by " + ",
/// coefficients in [1, p-1], unit coefficients omitted. The zero form is "0".
std::string to_string(const Polynomial& f);

}  // namespace nodal
