#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mathieu {

enum class ClaimStatus {
    verified,
    refuted_as_printed,
    verified_with_correction,
    inconclusive,
};

constexpr std::string_view to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::verified: return "verified";
        case ClaimStatus::refuted_as_printed: return "refuted-as-printed";
        case ClaimStatus::verified_with_correction: return "verified-with-correction";
        case ClaimStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

//! One labelled piece of numeric or exact-rational supporting data.
struct Evidence {
    std::string description;
    std::string value;
};

//! A separately adjudicated part of a claim (e.g. a sign statement inside a
//! coefficient claim, or the corrected variant of a refuted formula).
struct SubClaim {
    std::string label;
    ClaimStatus status = ClaimStatus::inconclusive;
};

//! Verdict for one registry entry.
//!
//! A non-inconclusive status is always backed by either disjoint enclosures
//! (separation > 0, width_scale = the widest enclosure involved) or an exact
//! rational identity (exact = true).
struct ClaimVerdict {
    std::string id;     // "C1".."C10"
    std::string title;  // what is being claimed
    std::string source; // citation into the audited note (numbered display or section)
    ClaimStatus status = ClaimStatus::inconclusive;
    double separation = 0.0;
    double width_scale = 0.0;
    bool exact = false;
    std::vector<SubClaim> subclaims;
    std::vector<Evidence> evidence;
};

//! Recompute every registry verdict.  Deterministic: fixed grids, fixed
//! tolerances, no randomness; two calls produce identical output.
std::vector<ClaimVerdict> run_claims();

} // namespace mathieu
