#pragma once

#include "mathieu/rational.hpp"

#include <vector>

namespace mathieu {

//! Truncated formal power series with exact rational coefficients,
//! represented as coefficients c[0..order] of sum c_k x^k.
//!
//! This is the exact oracle backing the kernel's small-x branches and the
//! Taylor-coefficient claims: everything here is integer arithmetic, no
//! floating point.
class RationalSeries {
  public:
    //! Zero series of the given truncation order (order >= 0).
    explicit RationalSeries(int order);

    static RationalSeries from_coeffs(std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& operator[](int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    Rational& operator[](int k) { return coeffs_.at(static_cast<size_t>(k)); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const RationalSeries& o) const { return coeffs_ == o.coeffs_; }

  private:
    std::vector<Rational> coeffs_;
};

//! Ring operations.  Binary operations truncate to the smaller operand order.
RationalSeries add(const RationalSeries& a, const RationalSeries& b);
RationalSeries sub(const RationalSeries& a, const RationalSeries& b);
RationalSeries mul(const RationalSeries& a, const RationalSeries& b);
RationalSeries scale(const RationalSeries& a, const Rational& c);

//! Multiply by x^m (m >= 0); the order grows by m, no coefficients are lost.
RationalSeries shift(const RationalSeries& a, int m);

//! Termwise derivative; order drops by one (requires order >= 1).
RationalSeries derive(const RationalSeries& a);

//! Multiplicative inverse of a unit series; requires a[0] == 1.
RationalSeries recip_unit(const RationalSeries& a);

//! exp(a*x) truncated: coefficients a^k / k!.
RationalSeries exp_scaled(const Rational& a, int order);

//! Taylor series of x/(e^x - 1) (Bernoulli generating function):
//! [1, -1/2, 1/12, 0, -1/720, 0, 1/30240, ...].
RationalSeries bose_kernel_series(int order);

//! Taylor series of (3-x)e^{2x} - 4x e^x - x - 3, the numerator of the
//! closed form of the kernel's third derivative u''' = e^x * N(x)/(e^x-1)^4.
//! Coefficients vanish through x^4; the x^5 coefficient is -1/30.
//! Requires order >= 5.
RationalSeries fsecond_numerator_series(int order);

//! Exact limit of u''(x) as x -> 0+, i.e. the constant Taylor coefficient of
//! the kernel's second derivative.  Equals 1/6.
Rational fprime_limit_at_zero();

//! Horner evaluation in double precision (for cross-checks and the kernel's
//! small-x branches).
double eval_poly(const RationalSeries& s, double x);

std::vector<double> to_doubles(const RationalSeries& s);

} // namespace mathieu
