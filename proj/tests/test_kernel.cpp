#include "mathieu/kernel.hpp"

#include "mathieu/powser.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

namespace {

// Reference values computed independently with 40-digit arithmetic.
constexpr double kBose1 = 0.58197670686932642439;
constexpr double kF1 = -0.33869688733846589456;
constexpr double kF001 = -0.49833333888886904769;
constexpr double kFprime005 = 0.16662500619967351916;
constexpr double kFprime1 = 0.15094757870940275504;
constexpr double kFsecond025 = -0.0082715997176587162438;
constexpr double kFsecond1 = -0.029628495261797969495;
constexpr double kPrintedFprime1 = -1.6903996097061818829;
constexpr double kPrintedChain1 = -34.985248831255154512;
constexpr double kPrintedRatio1 = -0.010899714279660963686;

// k-th derivative of the exact kernel Taylor series, truncated at `order`.
mathieu::RationalSeries kernel_derivative_series(int k, int order) {
    mathieu::RationalSeries s = mathieu::bose_kernel_series(order + k);
    for (int i = 0; i < k; ++i) {
        s = mathieu::derive(s);
    }
    return s;
}

} // namespace

TEST_CASE("kernel values at anchors") {
    CHECK(mathieu::bose_kernel(0.0) == 1.0);
    CHECK(mathieu::bose_kernel(1.0) == doctest::Approx(kBose1).epsilon(1e-14));
    // u(x) ~ 1 - x/2 as x -> 0; the naive closed form would lose ~8 digits here.
    CHECK(std::fabs(mathieu::bose_kernel(1e-8) - (1.0 - 5e-9)) < 1e-15);

    CHECK(mathieu::f_closed(0.0) == -0.5);
    CHECK(mathieu::f_closed(1.0) == doctest::Approx(kF1).epsilon(1e-14));
    CHECK(mathieu::f_closed(0.01) == doctest::Approx(kF001).epsilon(1e-14));

    CHECK(mathieu::fprime_closed(0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(mathieu::fprime_closed(0.05) ==
          doctest::Approx(kFprime005).epsilon(1e-13));
    CHECK(mathieu::fprime_closed(1.0) == doctest::Approx(kFprime1).epsilon(1e-13));

    CHECK(mathieu::fsecond_closed(0.0) == 0.0);
    // x = 0.25 sits exactly on the closed-form side of the seam, where the
    // numerator cancels ~5 digits; 5e-12 is the honest agreement level.
    CHECK(mathieu::fsecond_closed(0.25) ==
          doctest::Approx(kFsecond025).epsilon(5e-12));
    CHECK(mathieu::fsecond_closed(1.0) ==
          doctest::Approx(kFsecond1).epsilon(1e-12));

    CHECK(mathieu::alt_kernel(0.0) == 0.0);
    CHECK(mathieu::alt_kernel(1.0) ==
          doctest::Approx(1.0 / (1.0 + std::numbers::e)).epsilon(1e-14));
}

TEST_CASE("series and closed-form branches agree across each seam") {
    struct Seam {
        double (*fn)(double);
        int derivatives;
        int series_order;
        double cutoff;
    };
    const Seam seams[] = {
        {&mathieu::bose_kernel, 0, 10, 1e-2},
        {&mathieu::f_closed, 1, 9, 1e-2},
        {&mathieu::fprime_closed, 2, 10, 5e-2},
        {&mathieu::fsecond_closed, 3, 15, 0.25},
    };
    for (const Seam& s : seams) {
        CAPTURE(s.derivatives);
        const mathieu::RationalSeries poly =
            kernel_derivative_series(s.derivatives, s.series_order);
        // Below the cutoff the function is the polynomial itself.
        const double below = 0.9 * s.cutoff;
        CHECK(std::fabs(s.fn(below) - mathieu::eval_poly(poly, below)) < 1e-13);
        // Just above it the closed form must agree with the (still accurate)
        // polynomial to the advertised 1e-12.
        const double above = 1.1 * s.cutoff;
        CHECK(std::fabs(s.fn(above) - mathieu::eval_poly(poly, above)) < 1e-12);
    }
}

TEST_CASE("kernel chain decays at large arguments") {
    CHECK(std::fabs(mathieu::bose_kernel(100.0)) < 1e-40);
    CHECK(std::fabs(mathieu::f_closed(100.0)) < 1e-40);
    CHECK(std::fabs(mathieu::fprime_closed(100.0)) < 1e-40);
    CHECK(std::fabs(mathieu::fsecond_closed(100.0)) < 1e-40);
}

TEST_CASE("second derivative of the kernel is negative away from zero") {
    for (int i = 1; i <= 200; ++i) {
        // Log-spaced grid over (0, 40].
        const double x = 40.0 * std::pow(10.0, -3.0 * (200 - i) / 199.0);
        CAPTURE(x);
        CHECK(mathieu::fsecond_closed(x) < 0.0);
    }
}

TEST_CASE("as-printed formulas reproduce their own values, not the derivatives") {
    CHECK(mathieu::fprime_as_printed(1.0) ==
          doctest::Approx(kPrintedFprime1).epsilon(1e-13));
    CHECK(mathieu::fsecond_as_printed_chain(1.0) ==
          doctest::Approx(kPrintedChain1).epsilon(1e-13));
    CHECK(mathieu::fsecond_as_printed_ratio(1.0) ==
          doctest::Approx(kPrintedRatio1).epsilon(1e-13));

    // The transcribed ratio form drops the e^x prefactor, so it is exactly
    // e^x times too small at every x (a factor of e at x = 1).
    for (const double x : {0.5, 1.0, 2.0, 5.0}) {
        CAPTURE(x);
        CHECK(std::fabs(mathieu::fsecond_closed(x) /
                            mathieu::fsecond_as_printed_ratio(x) -
                        std::exp(x)) < 1e-9);
    }

    // And the printed formulas sit far from the true derivatives at x = 1.
    CHECK(std::fabs(mathieu::fprime_as_printed(1.0) - kFprime1) > 1e-2);
    CHECK(std::fabs(mathieu::fsecond_as_printed_chain(1.0) - kFsecond1) > 1e-2);
    CHECK(std::fabs(mathieu::fsecond_as_printed_ratio(1.0) - kFsecond1) > 1e-2);
}

TEST_CASE("finite differences with Richardson extrapolation") {
    const auto square = [](double x) { return x * x * x; };
    // d/dx x^3 at 3 is 27; d2/dx2 is 18.
    CHECK(mathieu::finite_difference(square, 3.0, 1, 1e-2) ==
          doctest::Approx(27.0).epsilon(1e-9));
    CHECK(mathieu::finite_difference(square, 3.0, 2, 1e-2) ==
          doctest::Approx(18.0).epsilon(1e-7));

    // The first derivative of u is f everywhere.
    for (const double x : {0.5, 1.0, 3.0}) {
        CAPTURE(x);
        const double fd =
            mathieu::finite_difference(mathieu::bose_kernel, x, 1, 1e-3);
        CHECK(std::fabs(fd - mathieu::f_closed(x)) < 1e-10);
    }

    CHECK_THROWS_AS(mathieu::finite_difference([](double x) { return x; }, 1.0,
                                               3, 1e-2),
                    std::invalid_argument);
    CHECK_THROWS_AS(mathieu::finite_difference([](double x) { return x; }, 1.0,
                                               1, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(mathieu::finite_difference([](double x) { return x; },
                                               1e-3, 1, 1e-2),
                    std::invalid_argument);
}
