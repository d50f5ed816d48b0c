#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "triaut/polynomial.hpp"

namespace triaut {

// ASCII grammar (whitespace allowed between tokens):
//   rational := '-'? digits ('/' digits)?
//   variable := 'x' digits            (1-based)
//   power    := variable ('^' digits)?
//   monomial := power ('*' power)*
//   term     := rational ('*' monomial)? | '-'? monomial
//   poly     := term (('+'|'-') term)* | '0'
// Factor order inside a Free monomial is kept; Commutative input is normalized.

/// Throws ParseError with the 1-based byte offset of the first bad character.
Polynomial parse_polynomial(std::string_view text, AlgebraMode mode, std::size_t n);

/// Canonical rendering, highest-ranked term first, e.g. "1/2*x1^2 - 1/2*x1".
std::string to_string(const Polynomial& p);
std::string to_string(AlgebraMode mode, const Monomial& m);
std::string_view to_string(AlgebraMode mode);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace triaut
