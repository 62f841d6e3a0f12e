#pragma once

#include <gmpxx.h>
#include <string>

namespace yev {

// Exact rationals. mpq_class keeps values canonical: reduced, denominator > 0.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "p" or "p/q", canonical.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace yev
