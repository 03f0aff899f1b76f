#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wordlab {

// Exact arithmetic foundation. Int is an arbitrary-precision integer, Rat an
// always-canonical rational (gcd 1, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

// Floor of sqrt(x). Requires x >= 0.
Int isqrt(const Int& x);

// True when x is a perfect square.
bool is_perfect_square(const Int& x);

// Floor division (rounds toward negative infinity). Requires b != 0.
Int floor_div(const Int& a, const Int& b);

Int pow10(unsigned k);

// Canonicalized rational, numerator/denominator copied in.
Rat make_rat(const Int& num, const Int& den);

// Parses "p" or "p/q" with optional sign. Throws Error(Parse) on bad input
// or a zero denominator.
Rat parse_rat(std::string_view text);

// Renders v with exactly `places` digits after the decimal point, rounding
// ties to even. The result always carries a sign only when negative and at
// least one integer digit ("0.500000000", "-0.062").
std::string decimal_of_rat(const Rat& v, int places = 9);

// Renders sqrt(v) the same way. Requires v >= 0. Exact when v is a square
// of a rational; otherwise correct rounding is decided from one extra digit,
// which cannot tie because the value is irrational.
std::string decimal_of_sqrt(const Rat& v, int places = 9);

// Renders a value known only through f = floor(|v| * 10^(places+1)) with
// irrational |v|; the guard digit decides the rounding and a tie cannot
// occur. Pass `negative` for the sign of v.
std::string decimal_from_guarded_floor(const Int& f, int places, bool negative);

// "p/q" (or just "p" when the denominator is 1).
std::string rat_to_string(const Rat& v);

}  // namespace wordlab
