#include "mathieu/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <sstream>

namespace mathieu {

namespace {

using ordered_json = nlohmann::ordered_json;

//! RFC-4180 style quoting: quote when the field contains a comma, quote or
//! newline; embedded quotes are doubled.
std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out += c;
        }
    }
    out += '"';
    return out;
}

ordered_json verdict_to_json(const ClaimVerdict& v) {
    ordered_json j;
    j["id"] = v.id;
    j["title"] = v.title;
    j["source"] = v.source;
    j["status"] = std::string(to_string(v.status));
    j["separation"] = fmt17(v.separation);
    j["width_scale"] = fmt17(v.width_scale);
    j["exact"] = v.exact;
    ordered_json subs = ordered_json::array();
    for (const SubClaim& s : v.subclaims) {
        ordered_json js;
        js["label"] = s.label;
        js["status"] = std::string(to_string(s.status));
        subs.push_back(js);
    }
    j["subclaims"] = subs;
    ordered_json ev = ordered_json::array();
    for (const Evidence& e : v.evidence) {
        ordered_json je;
        je["description"] = e.description;
        je["value"] = e.value;
        ev.push_back(je);
    }
    j["evidence"] = ev;
    return j;
}

} // namespace

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string render_claims_markdown(const std::vector<ClaimVerdict>& verdicts) {
    std::ostringstream os;
    os << "# Claim verification report\n\n";
    os << "| id | status | separation | width scale | exact | source |\n";
    os << "|----|--------|------------|-------------|-------|--------|\n";
    for (const ClaimVerdict& v : verdicts) {
        os << "| " << v.id << " | " << to_string(v.status) << " | "
           << fmt17(v.separation) << " | " << fmt17(v.width_scale) << " | "
           << (v.exact ? "yes" : "no") << " | " << v.source << " |\n";
    }
    for (const ClaimVerdict& v : verdicts) {
        os << "\n## " << v.id << ": " << v.title << "\n\n";
        os << "- source: " << v.source << "\n";
        os << "- status: " << to_string(v.status) << "\n";
        os << "- separation: " << fmt17(v.separation) << "\n";
        os << "- width scale: " << fmt17(v.width_scale) << "\n";
        os << "- exact: " << (v.exact ? "yes" : "no") << "\n";
        if (!v.subclaims.empty()) {
            os << "\nSub-claims:\n\n";
            for (const SubClaim& s : v.subclaims) {
                os << "- [" << to_string(s.status) << "] " << s.label << "\n";
            }
        }
        if (!v.evidence.empty()) {
            os << "\nEvidence:\n\n";
            for (const Evidence& e : v.evidence) {
                os << "- " << e.description << " = " << e.value << "\n";
            }
        }
    }
    return os.str();
}

std::string render_claims_json(const std::vector<ClaimVerdict>& verdicts) {
    ordered_json root = ordered_json::array();
    for (const ClaimVerdict& v : verdicts) {
        root.push_back(verdict_to_json(v));
    }
    return root.dump(2) + "\n";
}

std::string render_claims_csv(const std::vector<ClaimVerdict>& verdicts) {
    std::ostringstream os;
    os << "id,status,separation,width_scale,exact,source,title\n";
    for (const ClaimVerdict& v : verdicts) {
        os << csv_escape(v.id) << ',' << to_string(v.status) << ','
           << fmt17(v.separation) << ',' << fmt17(v.width_scale) << ','
           << (v.exact ? "true" : "false") << ',' << csv_escape(v.source) << ','
           << csv_escape(v.title) << '\n';
    }
    return os.str();
}

std::string render_scan_csv(const std::vector<ScanRow>& rows) {
    const ScanSummary summary = summarize_scan(rows);
    std::ostringstream os;
    os << "h,value,half_width\n";
    for (const ScanRow& r : rows) {
        os << fmt17(r.h) << ',' << fmt17(r.value) << ',' << fmt17(r.half_width)
           << '\n';
    }
    os << "# max_upward_jump=" << fmt17(summary.max_upward_jump)
       << " max_certified_excess=" << fmt17(summary.max_certified_excess)
       << " monotone_within_certification="
       << (summary.monotone_within_certification ? "true" : "false") << '\n';
    return os.str();
}

} // namespace mathieu
