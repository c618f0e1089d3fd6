#pragma once

#include <cstdint>
#include <vector>

namespace mathieu {

enum class ScanSeries { F, S };

struct ScanRow {
    double h = 0.0;
    double value = 0.0;
    double half_width = 0.0;
};

//! Summary of a scan's certified monotonicity: an "upward jump" between
//! adjacent rows is only counted when it exceeds the combined half-widths.
struct ScanSummary {
    double max_upward_jump = 0.0;       // max of value[i+1] - value[i]
    double max_certified_excess = 0.0;  // max of jump - (hw[i] + hw[i+1])
    bool monotone_within_certification = true;
};

//! Evaluate the series on `steps` evenly spaced points of [h_min, h_max]
//! (steps >= 2, 0 <= h_min < h_max), each with enclosure half-width <= tol.
std::vector<ScanRow> scan_series(ScanSeries series, double h_min, double h_max,
                                 int steps, double tol);

ScanSummary summarize_scan(const std::vector<ScanRow>& rows);

} // namespace mathieu
