#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string_view>

namespace mathieu {

//! Closed interval [lo, hi] certifying that a real quantity lies inside.
//!
//! Enclosures are the unit of numerical truth in this library: every series
//! evaluator and quadrature routine returns one, built from a truncation
//! bracket plus an explicit rounding allowance.  The rounding model is
//! documented at sum_rounding_slack() in compensated.hpp.
struct Enclosure {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    double half_width() const { return 0.5 * (hi - lo); }

    bool contains(double x) const { return lo <= x && x <= hi; }
    bool overlaps(const Enclosure& o) const { return lo <= o.hi && o.lo <= hi; }

    //! Symmetrically widen both endpoints by `slack` (>= 0).
    Enclosure widened(double slack) const { return {lo - slack, hi + slack}; }

    //! Interval from two endpoints in either order.
    static Enclosure ordered(double a, double b) {
        return {std::min(a, b), std::max(a, b)};
    }

    //! Smallest interval containing both operands.
    static Enclosure hull(const Enclosure& a, const Enclosure& b) {
        return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
    }
};

inline Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

//! Multiply an interval by a scalar (sign-aware).
inline Enclosure scale(const Enclosure& e, double c) {
    return c >= 0 ? Enclosure{e.lo * c, e.hi * c} : Enclosure{e.hi * c, e.lo * c};
}

//! How a value was produced; reported alongside every evaluation.
enum class Method { direct, integral, integral_parts, expansion };

constexpr std::string_view to_string(Method m) {
    switch (m) {
        case Method::direct: return "direct";
        case Method::integral: return "integral";
        case Method::integral_parts: return "integral-parts";
        case Method::expansion: return "expansion";
    }
    return "unknown";
}

//! Result of a certified summation or quadrature.
//!
//! Invariants: enclosure.contains(value); value is the midpoint; the width
//! meets the caller's 2*tol budget including the rounding allowance.
struct SumResult {
    double value = 0.0;
    Enclosure enclosure;
    std::uint64_t terms_used = 0;
    Method method = Method::direct;
};

//! Parameters shared by the series evaluators.
//!
//! h >= 0 is the series parameter, mu > 1 the exponent of the generalized
//! variant (the classical series has mu = 2), tol in (0, 1e-2] the requested
//! half-width of the result enclosure.
struct SeriesParams {
    double h = 0.0;
    double mu = 2.0;
    double tol = 1e-10;
};

} // namespace mathieu
