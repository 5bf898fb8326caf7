#pragma once

#include <gmpxx.h>

#include <string>

namespace tchains {

/// Exact rational scalar used for all chain coefficients, norms and matrices.
using Rat = mpq_class;

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// Exact conversion from a 64-bit integer (gmpxx has no long long overloads).
inline Rat rat_of(long long v) {
  static_assert(sizeof(long) == sizeof(long long));
  return Rat(static_cast<long>(v));
}

/// base^exp with a nonnegative integer exponent.
Rat rat_pow(const Rat& base, unsigned long exp);

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws
/// std::invalid_argument on anything else, including a zero denominator.
Rat rat_from_string(const std::string& s);

/// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& q);

/// Fixed-point decimal rendering (round half away from zero), e.g. "0.666667".
std::string rat_to_decimal(const Rat& q, int digits = 6);

}  // namespace tchains
