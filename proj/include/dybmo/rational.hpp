#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dybmo {

// Exact rational number. GMP keeps values canonical (lowest terms,
// positive denominator) as long as they are constructed canonically,
// which the helpers below guarantee.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p" (optionally signed). Result is canonical.
Rat parse_rat(const std::string& s);

// Serializes as "p/q", or "p" when the denominator is 1.
std::string rat_string(const Rat& r);

// Non-authoritative decimal rendering, 12 significant digits.
std::string rat_decimal(const Rat& r);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Largest integer <= r.
Int rat_floor(const Rat& r);

// Smallest integer >= r.
Int rat_ceil(const Rat& r);

// r reduced modulo 1 into [0, 1).
Rat mod_one(const Rat& r);

// 2^e as a rational; e may be negative.
Rat pow2(long e);

// Distance from r to the nearest integer, in [0, 1/2].
Rat dist_to_int(const Rat& r);

// True iff r (canonical) has a power-of-two denominator. In that case
// `exponent`, when non-null, receives the exponent e with den = 2^e.
bool is_dyadic(const Rat& r, long* exponent = nullptr);

}  // namespace dybmo
