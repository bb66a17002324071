#pragma once

#include <gmpxx.h>

#include <string>

#include "qseries/errors.hpp"

namespace qseries {

// Exact arbitrary-precision rational. mpq_class keeps the canonical form we
// need (lowest terms, positive denominator, 0/1 for zero).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw division_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// "p" or "p/q"
inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace qseries
