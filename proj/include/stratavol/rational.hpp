#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "stratavol/errors.hpp"

namespace stratavol {

// Exact arbitrary-precision rational scalar. mpq_class keeps values in lowest
// terms with a positive denominator, which is exactly the canonical form we
// need, so we use it directly rather than wrapping it.
using Rational = mpq_class;

// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Parses "p", "p/q" or "-p/q". Throws DomainError on malformed input or q=0.
Rational rational_from_string(std::string_view s);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace stratavol
