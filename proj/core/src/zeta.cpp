#include "mathieu/zeta.hpp"

#include "mathieu/compensated.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mathieu {

namespace {

//! integral_x^inf t^{-s} dt = x^{1-s}/(s-1).
double zeta_tail_integral(double x, int s) {
    return std::pow(x, 1.0 - static_cast<double>(s)) / (static_cast<double>(s) - 1.0);
}

double zeta_bracket_width(std::uint64_t n, int s) {
    const double nd = static_cast<double>(n);
    return zeta_tail_integral(nd, s) - zeta_tail_integral(nd + 1.0, s);
}

void validate_tol(double tol) {
    if (!(tol > 0.0) || !(tol <= 1e-2)) {
        throw std::invalid_argument("zeta: tol must lie in (0, 1e-2]");
    }
}

} // namespace

ZetaValue zeta_int(int s, double tol) {
    if (s < 2) {
        throw std::domain_error("zeta_int: s must be an integer >= 2");
    }
    validate_tol(tol);

    // Reserve room for the rounding slack (bounded by 16*eps per endpoint on
    // sums that never exceed 2*zeta(2) in absolute value) inside the budget.
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double slack_bound = 2.0 * 16.0 * eps * 2.0 * 1.65;
    const double target = std::min(0.95 * 2.0 * tol, 2.0 * tol - 1.5 * slack_bound);
    if (!(target > 0.0)) {
        throw ToleranceUnreachable(
            "zeta_int: requested tolerance sits below the rounding floor");
    }
    // n^{-s} is decreasing from n = 1, but start the bracket at n >= 2 so the
    // upper tail integral n^{1-s}/(s-1) is already small for large s.
    std::uint64_t cut = 2;
    const double est = std::pow(target, -1.0 / static_cast<double>(s));
    if (est > 2.0 && est < static_cast<double>(series_term_cap)) {
        cut = static_cast<std::uint64_t>(est);
    }
    while (cut > 2 && zeta_bracket_width(cut - 1, s) <= target) {
        --cut;
    }
    while (zeta_bracket_width(cut, s) > target) {
        if (cut >= series_term_cap) {
            throw ToleranceUnreachable("zeta_int: tolerance unreachable within the term cap");
        }
        ++cut;
    }

    CompensatedSum acc;
    for (std::uint64_t n = 1; n <= cut; ++n) {
        acc.add(std::pow(static_cast<double>(n), -static_cast<double>(s)));
    }
    const double partial = acc.value();
    const double slack = sum_rounding_slack(std::fabs(partial), acc.abs_sum());
    const Enclosure enc = Enclosure{partial + zeta_tail_integral(static_cast<double>(cut) + 1.0, s),
                                    partial + zeta_tail_integral(static_cast<double>(cut), s)}
                              .widened(slack);
    return {s, enc};
}

ZetaValue eta_int(int s, double tol) {
    const ZetaValue z = zeta_int(s, tol);
    // 1 - 2^{1-s} is exactly representable for the s used here.
    const double factor = 1.0 - std::ldexp(1.0, 1 - s);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    Enclosure enc = scale(z.enclosure, factor);
    enc = enc.widened(4.0 * eps * std::fabs(enc.midpoint()));
    return {s, enc};
}

ExpansionCoeff expansion_coeff(int m) {
    if (m < 1) {
        throw std::invalid_argument("expansion_coeff: m must be >= 1");
    }
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;
    const ZetaValue odd = zeta_int(2 * m + 1, 1e-13);
    const Enclosure corrected = scale(odd.enclosure, sign * static_cast<double>(m));

    double factorial = 1.0; // (2m-1)!
    for (int k = 2; k <= 2 * m - 1; ++k) {
        factorial *= static_cast<double>(k);
    }
    const double printed = sign * zeta_int(2 * m, 1e-13).value() / factorial;

    return {m, corrected.midpoint(), printed, corrected};
}

namespace {

//! Shared implementation of the two expansion evaluators; uses_eta selects
//! eta(2m+1) coefficients (alternating variant) over zeta(2m+1).
SumResult eval_expansion_impl(double h, double tol, bool uses_eta) {
    if (!(h >= 0.0) || !std::isfinite(h)) {
        throw std::invalid_argument("expansion: h must be finite and >= 0");
    }
    if (h >= 1.0) {
        throw std::domain_error(
            "expansion: series converges only for h < 1 (radius of convergence 1)");
    }
    validate_tol(tol);

    // Width budget: half to the alternating remainder cut, half spread over
    // the coefficient enclosures, whose widths sum to <= w_z / (1-h)^2.
    const double full_budget = 2.0 * tol;
    const double shrink = (1.0 - h) * (1.0 - h);
    const double coeff_tol = std::max(0.25 * full_budget * shrink,
                                      4.0 * std::numeric_limits<double>::epsilon());

    // Terms m*zeta(2m+1)*h^{m-1} decrease once m > h/(1-h).
    const int decreasing_from = static_cast<int>(h / (1.0 - h)) + 2;

    CompensatedSum lo_acc;
    CompensatedSum hi_acc;
    Enclosure next_term;
    int m = 0;
    for (;;) {
        ++m;
        if (m > 100000) {
            throw ToleranceUnreachable("expansion: tolerance unreachable (h too close to 1)");
        }
        const ZetaValue z = uses_eta ? eta_int(2 * m + 1, coeff_tol) : zeta_int(2 * m + 1, coeff_tol);
        const double sign = (m % 2 == 1) ? 1.0 : -1.0;
        const double magnitude = static_cast<double>(m) * std::pow(h, m - 1);
        const Enclosure term = scale(z.enclosure, sign * magnitude);
        lo_acc.add(term.lo);
        hi_acc.add(term.hi);

        const ZetaValue znext =
            uses_eta ? eta_int(2 * m + 3, coeff_tol) : zeta_int(2 * m + 3, coeff_tol);
        const double next_mag = static_cast<double>(m + 1) * std::pow(h, m);
        const double next_sign = (m % 2 == 1) ? -1.0 : 1.0;
        next_term = scale(znext.enclosure, next_sign * next_mag);
        if (m >= decreasing_from &&
            std::max(std::fabs(next_term.lo), std::fabs(next_term.hi)) <=
                0.45 * full_budget) {
            break;
        }
    }

    // Remainder lies between 0 and the next signed term.
    const Enclosure partial{lo_acc.value(), hi_acc.value()};
    const Enclosure remainder = Enclosure::hull({0.0, 0.0}, next_term);
    const double slack =
        sum_rounding_slack(std::fabs(partial.midpoint()),
                           std::max(lo_acc.abs_sum(), hi_acc.abs_sum()));
    const Enclosure enc = (partial + remainder).widened(slack);
    return {enc.midpoint(), enc, static_cast<std::uint64_t>(m), Method::expansion};
}

} // namespace

SumResult eval_expansion(double h, double tol) {
    return eval_expansion_impl(h, tol, false);
}

SumResult eval_expansion_alternating(double h, double tol) {
    return eval_expansion_impl(h, tol, true);
}

} // namespace mathieu
