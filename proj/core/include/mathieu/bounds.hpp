#pragma once

#include "mathieu/enclosure.hpp"

namespace mathieu {

//! Classical upper bound F(h) < 1/(2h), h > 0.  (The equivalent historical
//! statement is sum 2n/(n^2+h)^2 < 1/h.)
double upper_half_inverse(double h);

//! Two-sided refinement's lower half: F(h) > 1/(2h) - 1/(6h^2), h > 0.
double lower_bound(double h);

//! Refined upper bound 1/(1+h)^2 + 2/(4+h)^2 + 1/(2(4+h)) on 0 <= h < 2.
double schroder_refined(double h);

enum class BoundId { upper_half_inverse, lower_sixth, schroder_refined };
enum class BoundStatus { holds, fails, undecided };
enum class Relation { strict_upper, strict_lower };

//! Outcome of checking one bound at one h: the bound holds only when the
//! whole series enclosure sits strictly on the correct side.
struct BoundCheck {
    double h = 0.0;
    BoundId bound = BoundId::upper_half_inverse;
    Relation relation = Relation::strict_upper;
    double bound_value = 0.0;
    Enclosure series_enclosure;
    BoundStatus status = BoundStatus::undecided;
    int refinements = 0; // tolerance refinements consumed (tol/10 each, max 3)
};

//! Evaluate the series at h and classify the bound.  Starts at `tol` and
//! retries with tol/10 (up to three times) while the enclosure straddles the
//! bound value.
BoundCheck check_bound(double h, BoundId which, double tol);

} // namespace mathieu
