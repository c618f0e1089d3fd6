#include "mathieu/zeta.hpp"

#include "mathieu/series.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using mathieu::SumResult;
using mathieu::ZetaValue;

// Reference constants computed independently with 40-digit arithmetic.
namespace {
constexpr double kZeta2 = 1.6449340668482264365;
constexpr double kZeta3 = 1.2020569031595942854;
constexpr double kZeta4 = 1.0823232337111381915;
constexpr double kZeta5 = 1.0369277551433699263;
constexpr double kZeta7 = 1.0083492773819228268;
constexpr double kZeta9 = 1.0020083928260822144;
constexpr double kEta2 = 0.82246703342411321824;
constexpr double kEta3 = 0.90154267736969571405;
constexpr double kEta9 = 0.99809429754160533077;
} // namespace

TEST_CASE("zeta values with certified enclosures") {
    const ZetaValue z2 = mathieu::zeta_int(2);
    CHECK(z2.enclosure.width() <= 1e-12);
    CHECK(z2.enclosure.contains(kZeta2));
    CHECK(std::fabs(z2.value() - std::numbers::pi * std::numbers::pi / 6.0) < 1e-12);

    const ZetaValue z4 = mathieu::zeta_int(4);
    CHECK(z4.enclosure.contains(kZeta4));
    CHECK(std::fabs(z4.value() - std::pow(std::numbers::pi, 4) / 90.0) < 1e-12);

    CHECK(mathieu::zeta_int(3).enclosure.contains(kZeta3));
    CHECK(mathieu::zeta_int(5).enclosure.contains(kZeta5));
    CHECK(mathieu::zeta_int(7).enclosure.contains(kZeta7));
    CHECK(mathieu::zeta_int(9).enclosure.contains(kZeta9));
}

TEST_CASE("zeta decreases monotonically toward 1") {
    double prev = mathieu::zeta_int(2).value();
    for (int s = 3; s <= 14; ++s) {
        const ZetaValue z = mathieu::zeta_int(s);
        CHECK(z.enclosure.lo > 1.0);
        CHECK(z.value() < prev);
        prev = z.value();
    }
    CHECK(prev == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("zeta domain and tolerance validation") {
    CHECK_THROWS_AS((void)mathieu::zeta_int(1), std::domain_error);
    CHECK_THROWS_AS((void)mathieu::zeta_int(0), std::domain_error);
    CHECK_THROWS_AS((void)mathieu::zeta_int(2, 0.5), std::invalid_argument);
    CHECK_THROWS_AS((void)mathieu::zeta_int(2, 0.0), std::invalid_argument);
}

TEST_CASE("eta from the exact reflection factor") {
    CHECK(mathieu::eta_int(2).enclosure.contains(kEta2));
    CHECK(mathieu::eta_int(3).enclosure.contains(kEta3));
    CHECK(mathieu::eta_int(9).enclosure.contains(kEta9));
    // eta(3) = (3/4) zeta(3) exactly.
    CHECK(mathieu::eta_int(3).value() ==
          doctest::Approx(0.75 * kZeta3).epsilon(1e-14));
}

TEST_CASE("expansion coefficients: corrected values and sign pattern") {
    const auto c1 = mathieu::expansion_coeff(1);
    CHECK(c1.corrected == doctest::Approx(kZeta3).epsilon(1e-13));
    CHECK(c1.corrected_enclosure.contains(kZeta3));
    // The printed coefficient formula zeta(2m)/(2m-1)! gives zeta(2) at m=1.
    CHECK(c1.as_printed == doctest::Approx(kZeta2).epsilon(1e-13));

    const auto c2 = mathieu::expansion_coeff(2);
    CHECK(c2.corrected == doctest::Approx(-2.0738555102867398527).epsilon(1e-13));
    const auto c3 = mathieu::expansion_coeff(3);
    CHECK(c3.corrected == doctest::Approx(3.0250478321457684805).epsilon(1e-13));
    const auto c4 = mathieu::expansion_coeff(4);
    CHECK(c4.corrected == doctest::Approx(-4.0080335713043288577).epsilon(1e-13));

    for (int m = 1; m <= 8; ++m) {
        const auto c = mathieu::expansion_coeff(m);
        CAPTURE(m);
        const double expected_sign = (m % 2 == 1) ? 1.0 : -1.0;
        CHECK(c.corrected * expected_sign > 0.0);
        // |corrected| = m * zeta(2m+1) lies in (m, m*zeta(3)]; the upper end
        // is attained at m = 1.
        CHECK(std::fabs(c.corrected) > static_cast<double>(m));
        CHECK(std::fabs(c.corrected) <=
              static_cast<double>(m) * kZeta3 * (1.0 + 1e-14));
    }
    CHECK_THROWS_AS((void)mathieu::expansion_coeff(0), std::invalid_argument);
}

TEST_CASE("expansion evaluator matches the direct sum inside the radius") {
    const SumResult at0 = mathieu::eval_expansion(0.0, 1e-10);
    CHECK(at0.enclosure.contains(kZeta3));
    CHECK(at0.enclosure.width() <= 2e-10);
    CHECK(at0.method == mathieu::Method::expansion);

    const SumResult at01 = mathieu::eval_expansion(0.1, 1e-10);
    CHECK(at01.enclosure.contains(1.0213603178124853918));

    const SumResult at05 = mathieu::eval_expansion(0.5, 1e-10);
    CHECK(at05.enclosure.contains(0.61496570643107887993));

    for (const double h : {0.01, 0.1, 0.25, 0.5, 0.9}) {
        mathieu::SeriesParams p;
        p.h = h;
        p.tol = 1e-10;
        const SumResult direct = mathieu::eval_mathieu_direct(p);
        const SumResult exp = mathieu::eval_expansion(h, 1e-10);
        CAPTURE(h);
        CHECK(direct.enclosure.overlaps(exp.enclosure));
    }
}

TEST_CASE("expansion radius guard and boundary stress") {
    CHECK_THROWS_AS((void)mathieu::eval_expansion(1.0, 1e-10), std::domain_error);
    CHECK_THROWS_AS((void)mathieu::eval_expansion(1.5, 1e-10), std::domain_error);
    CHECK_THROWS_AS((void)mathieu::eval_expansion_alternating(1.0, 1e-10),
                    std::domain_error);
    CHECK_THROWS_AS((void)mathieu::eval_expansion(-0.1, 1e-10),
                    std::invalid_argument);

    // Slow-convergence regime near the radius, looser tolerance.
    mathieu::SeriesParams p;
    p.h = 0.99;
    p.tol = 1e-6;
    const SumResult direct = mathieu::eval_mathieu_direct(p);
    const SumResult exp = mathieu::eval_expansion(0.99, 1e-6);
    CHECK(direct.enclosure.overlaps(exp.enclosure));
}

TEST_CASE("alternating expansion matches the alternating sum") {
    const SumResult at0 = mathieu::eval_expansion_alternating(0.0, 1e-10);
    CHECK(at0.enclosure.contains(kEta3));

    const SumResult at05 = mathieu::eval_expansion_alternating(0.5, 1e-10);
    CHECK(at05.enclosure.contains(0.36913453529384457785));

    for (const double h : {0.01, 0.1, 0.25, 0.5, 0.9}) {
        mathieu::SeriesParams p;
        p.h = h;
        p.tol = 1e-10;
        const SumResult alt = mathieu::eval_alternating(p);
        const SumResult exp = mathieu::eval_expansion_alternating(h, 1e-10);
        CAPTURE(h);
        CHECK(alt.enclosure.overlaps(exp.enclosure));
    }

    // Second coefficient of the alternating expansion is -2*eta(5).
    CHECK(2.0 * mathieu::eta_int(5).value() ==
          doctest::Approx(1.9442395408938186119).epsilon(1e-13));
}

TEST_CASE("term-by-term derivative of the expansion matches finite differences") {
    const double h = 0.05;
    const double delta = 1e-4;
    mathieu::SeriesParams hi;
    hi.h = h + delta;
    hi.tol = 1e-12;
    mathieu::SeriesParams lo;
    lo.h = h - delta;
    lo.tol = 1e-12;
    const double fd = (mathieu::eval_mathieu_direct(hi).value -
                       mathieu::eval_mathieu_direct(lo).value) /
                      (2.0 * delta);

    double dseries = 0.0;
    for (int m = 2; m <= 12; ++m) {
        const auto c = mathieu::expansion_coeff(m);
        dseries += c.corrected * static_cast<double>(m - 1) * std::pow(h, m - 2);
    }
    CHECK(std::fabs(fd - dseries) < 1e-5);
}
