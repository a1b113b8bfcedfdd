#pragma once

// Exact rational arithmetic for Haar weights and digit fractions.
// Backed by boost::multiprecision so p^-n weights never overflow.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace padiclab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow_big(std::int64_t base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// base^exp as an exact rational, exp may be negative.
inline Rational pow_rational(std::int64_t base, int exp) {
    if (exp >= 0) return Rational(pow_big(base, exp));
    return Rational(1, pow_big(base, -exp));
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace padiclab
