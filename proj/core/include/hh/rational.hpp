#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hh/errors.hpp"

namespace hh {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (reduced fraction, positive denominator), which is what the expression
// kernel relies on for normal forms.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "n", "n/d" or a decimal like "-0.125" / "1e-3" into an exact rational.
Rational rat_parse(const std::string& text);

inline double to_double(const Rational& r) { return r.get_d(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Requires an integer that fits in long.
long to_long(const Rational& r);

// r^n for integer n (n may be negative; r must be nonzero then).
Rational rat_pow(const Rational& r, long n);

// Deterministic textual form "n" or "n/d".
std::string rat_str(const Rational& r);

} // namespace hh
