#pragma once

#include "mathieu/enclosure.hpp"

#include <cstdint>

namespace mathieu {

//! Hard cap on summed terms; evaluators throw ToleranceUnreachable instead of
//! silently degrading when the cap would be exceeded.
inline constexpr std::uint64_t series_term_cap = 100'000'000;

//! First index from which the summand n/(n^2+h)^mu is decreasing,
//! i.e. ceil(sqrt(h/(2*mu - 1))), at least 1.  Integral-test brackets and the
//! alternating remainder bound are only valid from here on.
std::uint64_t monotone_tail_start(double h, double mu);

//! Certified bracket for the tail sum_{k>n} k/(k^2+h)^mu via the integral
//! test: [((n+1)^2+h)^{1-mu}, (n^2+h)^{1-mu}] / (2*(mu-1)).
//!
//! Requires mu > 1 (std::domain_error) and n >= monotone_tail_start
//! (std::invalid_argument).
Enclosure tail_bracket(std::uint64_t n, const SeriesParams& params);

//! sum_{n>=1} n/(n^2+h)^2 with a certified enclosure of half-width <= tol.
//! params.mu is ignored (fixed at 2).
SumResult eval_mathieu_direct(const SeriesParams& params);

//! Alternating variant sum_{n>=1} (-1)^{n-1} n/(n^2+h)^2.  The enclosure uses
//! the alternating-series remainder bound, applied only past the index where
//! terms start decreasing.
SumResult eval_alternating(const SeriesParams& params);

//! Generalized variant sum_{n>=1} n/(n^2+h)^mu for mu > 1.
SumResult eval_generalized(const SeriesParams& params);

} // namespace mathieu
