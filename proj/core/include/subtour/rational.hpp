#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace subtour {

// Exact rational scalar used for all polytope data. cpp_rational keeps the
// value canonical (reduced fraction, positive denominator).
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt rat_num(const Rat& r) { return numerator(r); }
inline BigInt rat_den(const Rat& r) { return denominator(r); }

// Accepts "p", "-p", "p/q" with optional surrounding whitespace. Throws
// ParseError on anything else (including q == 0).
Rat parse_rational(const std::string& text);

// "p" when integral, else "p/q"; the canonical wire format.
std::string rat_to_string(const Rat& r);

bool rat_is_integer(const Rat& r);

// True iff r has a finite decimal expansion with at most max_digits fraction
// digits; then out is that expansion (e.g. 3/4 -> "0.75").
bool rat_to_decimal(const Rat& r, int max_digits, std::string& out);

}  // namespace subtour
