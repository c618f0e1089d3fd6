#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mathieu {

//! Exact arbitrary-precision rational, always in lowest terms with positive
//! denominator (cpp_rational canonicalizes on every operation).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den) {
    return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

//! Render as "p/q", or just "p" for integers.
inline std::string to_fraction_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

} // namespace mathieu
