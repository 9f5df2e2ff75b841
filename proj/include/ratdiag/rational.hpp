#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "ratdiag/error.hpp"

namespace ratdiag {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (lowest terms, positive denominator) under all arithmetic operations;
// parse_rational re-establishes the invariant for raw input.
using Int = mpz_class;
using Rational = mpq_class;

// Parses "num", "+num", "-num" or "num/den" (den > 0 after normalization).
// Throws Errc::bad_rational on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Int& n) { return sgn(n); }

// r^e for e >= 0.
Rational pow_rational(const Rational& r, unsigned long e);

// C(n, k), zero outside 0 <= k <= n.
Int binomial(unsigned long n, unsigned long k);

} // namespace ratdiag
