#include "mathieu/kernel.hpp"

#include "mathieu/powser.hpp"

#include <cmath>
#include <vector>

namespace mathieu {

namespace {

//! Double-precision Taylor coefficients of the kernel's k-th derivative,
//! generated once from the exact rational series.
std::vector<double> derived_kernel_coeffs(int derivatives, int order) {
    RationalSeries s = bose_kernel_series(order + derivatives);
    for (int i = 0; i < derivatives; ++i) {
        s = derive(s);
    }
    return to_doubles(s);
}

double eval_coeffs(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

// Per-function series cutoffs; see the header for the cancellation analysis.
constexpr double kernel_cutoff = 1e-2;
constexpr double f_cutoff = 1e-2;
constexpr double fprime_cutoff = 5e-2;
constexpr double fsecond_cutoff = 0.25;

} // namespace

double bose_kernel(double x) {
    if (!(x >= 0.0)) {
        throw std::invalid_argument("bose_kernel: x must be >= 0");
    }
    if (x < kernel_cutoff) {
        static const std::vector<double> coeffs = derived_kernel_coeffs(0, 10);
        return eval_coeffs(coeffs, x);
    }
    // x e^{-x} / (1 - e^{-x}) avoids overflow for large x.
    const double em = -std::expm1(-x);
    return x * std::exp(-x) / em;
}

double alt_kernel(double x) {
    if (!(x >= 0.0)) {
        throw std::invalid_argument("alt_kernel: x must be >= 0");
    }
    const double t = std::exp(-x);
    return x * t / (1.0 + t);
}

double f_closed(double x) {
    if (!(x >= 0.0)) {
        throw std::invalid_argument("f_closed: x must be >= 0");
    }
    if (x < f_cutoff) {
        static const std::vector<double> coeffs = derived_kernel_coeffs(1, 9);
        return eval_coeffs(coeffs, x);
    }
    // u' = t (em - x) / em^2 with t = e^{-x}, em = 1 - e^{-x}.
    const double t = std::exp(-x);
    const double em = -std::expm1(-x);
    return t * (em - x) / (em * em);
}

double fprime_closed(double x) {
    if (!(x >= 0.0)) {
        throw std::invalid_argument("fprime_closed: x must be >= 0");
    }
    if (x < fprime_cutoff) {
        static const std::vector<double> coeffs = derived_kernel_coeffs(2, 10);
        return eval_coeffs(coeffs, x);
    }
    // u'' = 2x e^{2x}/(e^x-1)^3 - (x+2)e^x/(e^x-1)^2
    //     = t (2x - (x+2) em) / em^3 in overflow-safe form.
    const double t = std::exp(-x);
    const double em = -std::expm1(-x);
    return t * (2.0 * x - (x + 2.0) * em) / (em * em * em);
}

double fsecond_closed(double x) {
    if (!(x >= 0.0)) {
        throw std::invalid_argument("fsecond_closed: x must be >= 0");
    }
    if (x < fsecond_cutoff) {
        static const std::vector<double> coeffs = derived_kernel_coeffs(3, 15);
        return eval_coeffs(coeffs, x);
    }
    // u''' = e^x ((3-x)e^{2x} - 4x e^x - x - 3)/(e^x-1)^4
    //      = t ((3-x) - 4x t - (x+3) t^2) / em^4 in overflow-safe form.
    const double t = std::exp(-x);
    const double em = -std::expm1(-x);
    const double em2 = em * em;
    return t * ((3.0 - x) - 4.0 * x * t - (x + 3.0) * t * t) / (em2 * em2);
}

double fprime_as_printed(double x) {
    if (!(x > 0.0)) {
        throw std::invalid_argument("fprime_as_printed: x must be > 0");
    }
    const double ex = std::exp(x);
    const double em = std::expm1(x);
    return 2.0 * x * ex / (em * em * em) - (x * ex + 2.0 * ex) / (em * em);
}

double fsecond_as_printed_chain(double x) {
    if (!(x > 0.0)) {
        throw std::invalid_argument("fsecond_as_printed_chain: x must be > 0");
    }
    const double ex = std::exp(x);
    const double em = std::expm1(x);
    const double em2 = em * em;
    return -6.0 * x * ex * ex * ex / (em2 * em2) -
           (6.0 * x * ex * ex + 6.0 * ex * ex) / (em2 * em) -
           (x * ex + 3.0 * ex) / em2;
}

double fsecond_as_printed_ratio(double x) {
    if (!(x > 0.0)) {
        throw std::invalid_argument("fsecond_as_printed_ratio: x must be > 0");
    }
    const double ex = std::exp(x);
    const double em = std::expm1(x);
    const double em2 = em * em;
    return ((3.0 - x) * ex * ex - 4.0 * x * ex - x - 3.0) / (em2 * em2);
}

} // namespace mathieu
