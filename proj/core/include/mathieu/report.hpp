#pragma once

#include "mathieu/claims.hpp"
#include "mathieu/scan.hpp"

#include <string>
#include <vector>

namespace mathieu {

//! Fixed 17-significant-digit rendering ('.' decimal separator, C locale);
//! every number the tool emits goes through this so reruns are byte-identical.
std::string fmt17(double v);

std::string render_claims_markdown(const std::vector<ClaimVerdict>& verdicts);
std::string render_claims_json(const std::vector<ClaimVerdict>& verdicts);
std::string render_claims_csv(const std::vector<ClaimVerdict>& verdicts);

//! CSV with mandatory "h,value,half_width" header and a trailing comment line
//! carrying the certified-monotonicity summary.
std::string render_scan_csv(const std::vector<ScanRow>& rows);

} // namespace mathieu
