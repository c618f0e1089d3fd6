#pragma once

#include <cmath>
#include <limits>

namespace mathieu {

//! Neumaier-compensated accumulator.
//!
//! Tracks the running sum, a first-order error term, and the sum of absolute
//! values of everything pushed so far.  The absolute sum feeds the rounding
//! allowance below; for compensated summation the true rounding error is
//! bounded by ~2*eps*sum(|t_k|) to first order, independent of term count.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
        abs_sum_ += std::fabs(x);
    }

    double value() const { return sum_ + comp_; }
    double abs_sum() const { return abs_sum_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    double abs_sum_ = 0.0;
};

//! Rounding allowance added symmetrically to every summation enclosure:
//! 16*eps*(|sum| + sum(|terms|)).  This is >= 8x the first-order Neumaier
//! error bound, so brackets stay honest without ballooning with term count.
inline double sum_rounding_slack(double value_abs, double abs_sum) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    return 16.0 * eps * (value_abs + abs_sum);
}

} // namespace mathieu
