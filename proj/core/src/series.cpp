#include "mathieu/series.hpp"

#include "mathieu/compensated.hpp"
#include "mathieu/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mathieu {

namespace {

void validate(const SeriesParams& p) {
    if (!(p.h >= 0.0) || !std::isfinite(p.h)) {
        throw std::invalid_argument("series: h must be finite and >= 0");
    }
    if (!(p.tol > 0.0) || !(p.tol <= 1e-2)) {
        throw std::invalid_argument("series: tol must lie in (0, 1e-2]");
    }
    if (!std::isfinite(p.mu)) {
        throw std::invalid_argument("series: mu must be finite");
    }
}

double term_at(std::uint64_t n, double h, double mu) {
    const double nd = static_cast<double>(n);
    const double base = nd * nd + h;
    if (mu == 2.0) {
        return nd / (base * base);
    }
    return nd / std::pow(base, mu);
}

//! Antiderivative tail: integral_x^inf t/(t^2+h)^mu dt = (x^2+h)^{1-mu}/(2(mu-1)).
double tail_integral(double x, double h, double mu) {
    const double base = x * x + h;
    if (mu == 2.0) {
        return 1.0 / (2.0 * base);
    }
    return std::pow(base, 1.0 - mu) / (2.0 * (mu - 1.0));
}

double bracket_width(std::uint64_t n, double h, double mu) {
    const double nd = static_cast<double>(n);
    return tail_integral(nd, h, mu) - tail_integral(nd + 1.0, h, mu);
}

//! Smallest n >= lo with bracket width <= target (width decreases in n).
//! Throws ToleranceUnreachable when the term cap cannot satisfy it.
std::uint64_t pick_cutoff(std::uint64_t lo, double h, double mu, double target) {
    if (lo > series_term_cap) {
        std::ostringstream os;
        os << "series: monotone tail start " << lo << " exceeds term cap "
           << series_term_cap << " (h=" << h << ")";
        throw ToleranceUnreachable(os.str());
    }
    if (bracket_width(lo, h, mu) <= target) {
        return lo;
    }
    std::uint64_t hi = lo;
    while (bracket_width(hi, h, mu) > target) {
        if (hi >= series_term_cap) {
            std::ostringstream os;
            os << "series: tolerance unreachable within " << series_term_cap
               << " terms (h=" << h << ", mu=" << mu << ", target width=" << target
               << ")";
            throw ToleranceUnreachable(os.str());
        }
        hi = std::min(hi * 2, series_term_cap);
    }
    std::uint64_t lo2 = hi / 2 < lo ? lo : hi / 2;
    while (lo2 + 1 < hi) {
        const std::uint64_t mid = lo2 + (hi - lo2) / 2;
        if (bracket_width(mid, h, mu) <= target) {
            hi = mid;
        } else {
            lo2 = mid;
        }
    }
    return hi;
}

SumResult sum_monotone(const SeriesParams& p, double mu) {
    // Reserve part of the 2*tol width budget for the rounding allowance, so
    // the total reported width still meets the contract.
    const double full_budget = 2.0 * p.tol;
    double target = 0.95 * full_budget;
    const std::uint64_t n0 = monotone_tail_start(p.h, mu);

    for (int attempt = 0; attempt < 2; ++attempt) {
        const std::uint64_t cut = pick_cutoff(n0, p.h, mu, target);
        CompensatedSum acc;
        for (std::uint64_t n = 1; n <= cut; ++n) {
            acc.add(term_at(n, p.h, mu));
        }
        const double partial = acc.value();
        const double tail_lo = tail_integral(static_cast<double>(cut) + 1.0, p.h, mu);
        const double tail_hi = tail_integral(static_cast<double>(cut), p.h, mu);
        const double slack = sum_rounding_slack(std::fabs(partial), acc.abs_sum());
        const Enclosure enc =
            Enclosure{partial + tail_lo, partial + tail_hi}.widened(slack);
        if (enc.width() <= full_budget) {
            return {enc.midpoint(), enc, cut, Method::direct};
        }
        // Rounding allowance ate the budget; retarget with it accounted for.
        target = full_budget - 2.0 * slack - 0.05 * full_budget;
        if (target <= 0.0) {
            throw ToleranceUnreachable(
                "series: requested tolerance sits below the floating-point "
                "rounding floor for this input");
        }
    }
    throw ToleranceUnreachable(
        "series: could not meet the requested tolerance after retargeting");
}

} // namespace

std::uint64_t monotone_tail_start(double h, double mu) {
    const double threshold = std::sqrt(h / (2.0 * mu - 1.0));
    const double c = std::ceil(threshold);
    return c < 1.0 ? 1 : static_cast<std::uint64_t>(c);
}

Enclosure tail_bracket(std::uint64_t n, const SeriesParams& params) {
    validate(params);
    if (!(params.mu > 1.0)) {
        throw std::domain_error("tail_bracket: mu must be > 1");
    }
    if (n < monotone_tail_start(params.h, params.mu)) {
        throw std::invalid_argument(
            "tail_bracket: n is below the index where terms start decreasing");
    }
    const double nd = static_cast<double>(n);
    return {tail_integral(nd + 1.0, params.h, params.mu),
            tail_integral(nd, params.h, params.mu)};
}

SumResult eval_mathieu_direct(const SeriesParams& params) {
    validate(params);
    return sum_monotone(params, 2.0);
}

SumResult eval_generalized(const SeriesParams& params) {
    validate(params);
    if (!(params.mu > 1.0)) {
        throw std::domain_error("eval_generalized: mu must be > 1");
    }
    SumResult r = sum_monotone(params, params.mu);
    return r;
}

SumResult eval_alternating(const SeriesParams& params) {
    validate(params);
    const double h = params.h;
    const double full_budget = 2.0 * params.tol;
    const std::uint64_t n0 = monotone_tail_start(h, 2.0);
    if (n0 > series_term_cap) {
        throw ToleranceUnreachable(
            "alternating series: monotone tail start exceeds the term cap");
    }

    // Sum terms until the alternating remainder bound |tail| <= next term is
    // both applicable (n >= n0) and small enough.  The true value then lies
    // between the partial sum and the partial sum plus the next signed term.
    //
    // Meeting the width budget alone can leave the reported midpoint far
    // above the true value when the sum is tiny (large h, where the series
    // nearly cancels), so once the budget is met keep sharpening, with a hard
    // bound on the extra work, until the bracket is also small relative to
    // the partial sum or falls below the rounding floor.
    const double target = 0.95 * full_budget;
    CompensatedSum acc;
    std::uint64_t n = 0;
    std::uint64_t sharpen_limit = series_term_cap;
    double next_term_mag = 0.0;
    for (;;) {
        ++n;
        if (n > series_term_cap) {
            throw ToleranceUnreachable(
                "alternating series: tolerance unreachable within the term cap");
        }
        const double t = term_at(n, h, 2.0);
        acc.add((n % 2 == 1) ? t : -t);
        next_term_mag = term_at(n + 1, h, 2.0);
        if (n >= n0 && next_term_mag <= target) {
            if (sharpen_limit == series_term_cap) {
                sharpen_limit = std::min(series_term_cap, n + 1'000'000);
            }
            const double floor = sum_rounding_slack(std::fabs(acc.value()), acc.abs_sum());
            if (next_term_mag <= std::max(0.25 * std::fabs(acc.value()), floor) ||
                n >= sharpen_limit) {
                break;
            }
        }
    }

    const double partial = acc.value();
    const double next_signed = (n % 2 == 0) ? next_term_mag : -next_term_mag;
    const double slack = sum_rounding_slack(std::fabs(partial), acc.abs_sum());
    const Enclosure enc =
        Enclosure::ordered(partial, partial + next_signed).widened(slack);
    if (enc.width() > full_budget) {
        throw ToleranceUnreachable(
            "alternating series: requested tolerance sits below the "
            "floating-point rounding floor for this input");
    }
    return {enc.midpoint(), enc, n, Method::direct};
}

} // namespace mathieu
