#include "mathieu/powser.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mathieu {

RationalSeries::RationalSeries(int order) {
    if (order < 0) {
        throw std::invalid_argument("RationalSeries: order must be >= 0");
    }
    coeffs_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

RationalSeries RationalSeries::from_coeffs(std::vector<Rational> coeffs) {
    if (coeffs.empty()) {
        throw std::invalid_argument("RationalSeries: need at least one coefficient");
    }
    RationalSeries s(static_cast<int>(coeffs.size()) - 1);
    s.coeffs_ = std::move(coeffs);
    return s;
}

namespace {

int common_order(const RationalSeries& a, const RationalSeries& b) {
    return std::min(a.order(), b.order());
}

} // namespace

RationalSeries add(const RationalSeries& a, const RationalSeries& b) {
    const int k = common_order(a, b);
    RationalSeries r(k);
    for (int i = 0; i <= k; ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

RationalSeries sub(const RationalSeries& a, const RationalSeries& b) {
    const int k = common_order(a, b);
    RationalSeries r(k);
    for (int i = 0; i <= k; ++i) {
        r[i] = a[i] - b[i];
    }
    return r;
}

RationalSeries mul(const RationalSeries& a, const RationalSeries& b) {
    const int k = common_order(a, b);
    RationalSeries r(k);
    for (int i = 0; i <= k; ++i) {
        Rational acc(0);
        for (int j = 0; j <= i; ++j) {
            acc += a[j] * b[i - j];
        }
        r[i] = acc;
    }
    return r;
}

RationalSeries scale(const RationalSeries& a, const Rational& c) {
    RationalSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        r[i] = a[i] * c;
    }
    return r;
}

RationalSeries shift(const RationalSeries& a, int m) {
    if (m < 0) {
        throw std::invalid_argument("shift: exponent must be >= 0");
    }
    RationalSeries r(a.order() + m);
    for (int i = 0; i <= a.order(); ++i) {
        r[i + m] = a[i];
    }
    return r;
}

RationalSeries derive(const RationalSeries& a) {
    if (a.order() < 1) {
        throw std::invalid_argument("derive: order must be >= 1");
    }
    RationalSeries r(a.order() - 1);
    for (int i = 0; i < a.order(); ++i) {
        r[i] = a[i + 1] * Rational(i + 1);
    }
    return r;
}

RationalSeries recip_unit(const RationalSeries& a) {
    if (a[0] != Rational(1)) {
        throw std::invalid_argument("recip_unit: constant coefficient must be 1");
    }
    // b_0 = 1, b_k = -sum_{j=1..k} a_j b_{k-j}.
    RationalSeries b(a.order());
    b[0] = Rational(1);
    for (int k = 1; k <= a.order(); ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) {
            acc += a[j] * b[k - j];
        }
        b[k] = -acc;
    }
    return b;
}

RationalSeries exp_scaled(const Rational& a, int order) {
    RationalSeries r(order);
    r[0] = Rational(1);
    for (int k = 1; k <= order; ++k) {
        r[k] = r[k - 1] * a / Rational(k);
    }
    return r;
}

RationalSeries bose_kernel_series(int order) {
    // x/(e^x - 1) = 1 / ((e^x - 1)/x); the divisor has coefficients 1/(k+1)!.
    RationalSeries divisor(order);
    Rational fact(1);
    for (int k = 0; k <= order; ++k) {
        fact *= Rational(k + 1);
        divisor[k] = Rational(1) / fact;
    }
    return recip_unit(divisor);
}

RationalSeries fsecond_numerator_series(int order) {
    if (order < 5) {
        throw std::invalid_argument("fsecond_numerator_series: order must be >= 5");
    }
    // (3 - x) e^{2x}
    const RationalSeries e2x = exp_scaled(Rational(2), order);
    RationalSeries three_minus_x(order);
    three_minus_x[0] = Rational(3);
    three_minus_x[1] = Rational(-1);
    RationalSeries r = mul(three_minus_x, e2x);

    // - 4x e^x
    const RationalSeries ex = exp_scaled(Rational(1), order);
    r = sub(r, scale(shift(ex, 1), Rational(4)));

    // - x - 3
    RationalSeries linear(order);
    linear[0] = Rational(3);
    linear[1] = Rational(1);
    return sub(r, linear);
}

Rational fprime_limit_at_zero() {
    // Constant coefficient of u'' where u = x/(e^x - 1).
    return derive(derive(bose_kernel_series(4)))[0];
}

double eval_poly(const RationalSeries& s, double x) {
    double acc = 0.0;
    for (int k = s.order(); k >= 0; --k) {
        acc = acc * x + to_double(s[k]);
    }
    return acc;
}

std::vector<double> to_doubles(const RationalSeries& s) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(s.order()) + 1);
    for (const Rational& c : s.coeffs()) {
        out.push_back(to_double(c));
    }
    return out;
}

} // namespace mathieu
