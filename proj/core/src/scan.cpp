#include "mathieu/scan.hpp"

#include "mathieu/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace mathieu {

std::vector<ScanRow> scan_series(ScanSeries series, double h_min, double h_max,
                                 int steps, double tol) {
    if (steps < 2) {
        throw std::invalid_argument("scan requires at least two steps");
    }
    if (!(h_min >= 0.0) || !(h_max > h_min)) {
        throw std::invalid_argument("scan requires 0 <= h_min < h_max");
    }
    std::vector<ScanRow> rows;
    rows.reserve(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        SeriesParams p;
        p.h = h_min + (h_max - h_min) * static_cast<double>(i) /
                          static_cast<double>(steps - 1);
        p.tol = tol;
        const SumResult r = series == ScanSeries::F ? eval_mathieu_direct(p)
                                                    : eval_alternating(p);
        rows.push_back({p.h, r.value, 0.5 * r.enclosure.width()});
    }
    return rows;
}

ScanSummary summarize_scan(const std::vector<ScanRow>& rows) {
    ScanSummary s;
    for (size_t i = 1; i < rows.size(); ++i) {
        const ScanRow& prev = rows[i - 1];
        const ScanRow& cur = rows[i];
        const double jump = cur.value - prev.value;
        // Certified violation of decrease: the whole current enclosure sits
        // above the whole previous one.
        const double certified_excess =
            (cur.value - cur.half_width) - (prev.value + prev.half_width);
        if (i == 1) {
            s.max_upward_jump = jump;
            s.max_certified_excess = certified_excess;
        } else {
            s.max_upward_jump = std::max(s.max_upward_jump, jump);
            s.max_certified_excess = std::max(s.max_certified_excess, certified_excess);
        }
    }
    s.monotone_within_certification = s.max_certified_excess <= 0.0;
    return s;
}

} // namespace mathieu
