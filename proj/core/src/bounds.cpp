#include "mathieu/bounds.hpp"

#include "mathieu/series.hpp"

#include <cmath>
#include <stdexcept>

namespace mathieu {

double upper_half_inverse(double h) {
    if (!(h > 0.0)) {
        throw std::domain_error("upper_half_inverse: h must be > 0");
    }
    return 1.0 / (2.0 * h);
}

double lower_bound(double h) {
    if (!(h > 0.0)) {
        throw std::domain_error("lower_bound: h must be > 0");
    }
    return 1.0 / (2.0 * h) - 1.0 / (6.0 * h * h);
}

double schroder_refined(double h) {
    if (!(h >= 0.0) || !(h < 2.0)) {
        throw std::domain_error("schroder_refined: defined for 0 <= h < 2");
    }
    const double a = 1.0 + h;
    const double b = 4.0 + h;
    return 1.0 / (a * a) + 2.0 / (b * b) + 1.0 / (2.0 * b);
}

BoundCheck check_bound(double h, BoundId which, double tol) {
    BoundCheck out;
    out.h = h;
    out.bound = which;
    switch (which) {
        case BoundId::upper_half_inverse:
            out.relation = Relation::strict_upper;
            out.bound_value = upper_half_inverse(h);
            break;
        case BoundId::lower_sixth:
            out.relation = Relation::strict_lower;
            out.bound_value = lower_bound(h);
            break;
        case BoundId::schroder_refined:
            out.relation = Relation::strict_upper;
            out.bound_value = schroder_refined(h);
            break;
    }

    double current_tol = tol;
    for (int attempt = 0; attempt <= 3; ++attempt) {
        SeriesParams p;
        p.h = h;
        p.tol = current_tol;
        const SumResult r = eval_mathieu_direct(p);
        out.series_enclosure = r.enclosure;
        out.refinements = attempt;
        if (out.relation == Relation::strict_upper) {
            if (r.enclosure.hi < out.bound_value) {
                out.status = BoundStatus::holds;
                return out;
            }
            if (r.enclosure.lo > out.bound_value) {
                out.status = BoundStatus::fails;
                return out;
            }
        } else {
            if (r.enclosure.lo > out.bound_value) {
                out.status = BoundStatus::holds;
                return out;
            }
            if (r.enclosure.hi < out.bound_value) {
                out.status = BoundStatus::fails;
                return out;
            }
        }
        current_tol *= 0.1;
    }
    out.status = BoundStatus::undecided;
    return out;
}

} // namespace mathieu
