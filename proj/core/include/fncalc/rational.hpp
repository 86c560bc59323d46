#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fncalc {

// Exact coefficient field. mpq_class keeps numerator/denominator reduced with
// a positive denominator, and zero is stored as 0/1.
using Rational = mpq_class;

// Renders "n" or "n/d".
std::string to_string(const Rational& q);

// Accepts "n", "-n", "n/d". Throws Error(ParseError) on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

inline int sign_of(const Rational& q) { return sgn(q); }

// (-1)^e for any integer e.
inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace fncalc
