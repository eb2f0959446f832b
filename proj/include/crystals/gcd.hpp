#pragma once

#include "crystals/laurent.hpp"

namespace crystals::alg {

// Exact division of genuine polynomials (nonnegative exponents);
// throws std::logic_error when b does not divide a.
Poly poly_divexact(const Poly& a, const Poly& b);

// GCD of genuine polynomials over Q, computed by content extraction and a
// recursive subresultant polynomial remainder sequence. The result is
// normalized: integer coprime coefficients with positive leading
// coefficient (graded-lex leading term).
Poly poly_gcd(const Poly& a, const Poly& b);

// Scale to integer coprime coefficients with positive leading coefficient.
Poly normalize_primitive(const Poly& a);

}  // namespace crystals::alg
