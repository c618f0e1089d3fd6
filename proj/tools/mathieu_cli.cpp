// Command-line front end for the certified series toolkit.
//
// Subcommands:
//   eval    evaluate F, S, or the generalized series by a chosen method
//   coeffs  export the exact Taylor coefficients of the kernel numerator
//   claims  recompute the claim-verification report (md / json / csv)
//   scan    tabulate a series over an h interval as CSV
//
// Exit codes: 0 success, 2 usage error, 3 numeric failure, 4 I/O error.

#include "mathieu/claims.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/kernel.hpp"
#include "mathieu/powser.hpp"
#include "mathieu/quadrature.hpp"
#include "mathieu/report.hpp"
#include "mathieu/scan.hpp"
#include "mathieu/series.hpp"
#include "mathieu/zeta.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_numeric = 3;
constexpr int exit_io = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!std::cout) {
            throw IoError("failed to write to standard output");
        }
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        throw IoError("cannot open output file: " + out_path);
    }
    os << text;
    os.flush();
    if (!os) {
        throw IoError("failed while writing output file: " + out_path);
    }
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

mathieu::SumResult dispatch_eval(const std::string& series, const std::string& method,
                                 double h, double mu, double tol) {
    using namespace mathieu;
    SeriesParams p;
    p.h = h;
    p.mu = mu;
    p.tol = tol;

    if (series == "Fmu") {
        if (method != "direct") {
            throw UsageError("series Fmu supports only the direct method");
        }
        if (!(mu > 1.0)) {
            throw UsageError("series Fmu requires --mu > 1 (divergent otherwise)");
        }
        return eval_generalized(p);
    }

    if (method == "expansion" && h >= 1.0) {
        throw UsageError("expansion method requires h < 1: the power series in h "
                         "has radius of convergence 1");
    }
    if ((method == "integral" || method == "integral-parts") && !(h > 0.0)) {
        throw UsageError("integral methods require h > 0");
    }

    if (series == "F") {
        if (method == "direct") return eval_mathieu_direct(p);
        if (method == "integral") return integral_F(h, tol);
        if (method == "integral-parts") return integral_F_parts(h, tol);
        if (method == "expansion") return eval_expansion(h, tol);
    } else if (series == "S") {
        if (method == "direct") return eval_alternating(p);
        if (method == "integral") return integral_S(h, tol);
        if (method == "expansion") return eval_expansion_alternating(h, tol);
        if (method == "integral-parts") {
            throw UsageError("series S has no integrated-by-parts representation; "
                             "use direct, integral, or expansion");
        }
    }
    throw UsageError("unknown series/method combination: " + series + "/" + method);
}

int cmd_eval(const std::string& series, const std::string& method, double h,
             double mu, double tol, const std::string& out_path) {
    const mathieu::SumResult r = dispatch_eval(series, method, h, mu, tol);
    std::ostringstream os;
    os << "series: " << series << "\n"
       << "method: " << mathieu::to_string(r.method) << "\n"
       << "h: " << mathieu::fmt17(h) << "\n";
    if (series == "Fmu") {
        os << "mu: " << mathieu::fmt17(mu) << "\n";
    }
    os << "value: " << mathieu::fmt17(r.value) << "\n"
       << "enclosure: [" << mathieu::fmt17(r.enclosure.lo) << ", "
       << mathieu::fmt17(r.enclosure.hi) << "]\n"
       << "half_width: " << mathieu::fmt17(0.5 * r.enclosure.width()) << "\n"
       << "terms_used: " << r.terms_used << "\n";
    write_output(os.str(), out_path);
    return exit_ok;
}

// ---------------------------------------------------------------------------
// coeffs
// ---------------------------------------------------------------------------

int cmd_coeffs(int order, const std::string& out_path) {
    if (order < 5) {
        throw UsageError("--order must be at least 5 (lower coefficients vanish)");
    }
    const mathieu::RationalSeries s = mathieu::fsecond_numerator_series(order);
    std::ostringstream os;
    os << "# exact Taylor coefficients of (3-x)e^{2x} - 4x e^x - x - 3\n";
    for (int k = 0; k <= order; ++k) {
        os << "x^" << k << ": " << mathieu::to_fraction_string(s[k]) << "\n";
    }
    // Normalized bracket: factor out the exact leading term -x^5/30.
    os << "normalized: -x^5/30 * [";
    const mathieu::Rational lead = s[5];
    for (int k = 5; k <= order; ++k) {
        if (k > 5) os << " + ";
        os << mathieu::to_fraction_string(s[k] / lead);
        if (k > 5) os << "*x^" << (k - 5);
    }
    os << "]\n";
    os << "printed:    -x^5/10 * [1 + 1*x^1 + 23/126*x^2 + 1/14*x^3]"
          " (leading factor and bracket as published)\n";
    write_output(os.str(), out_path);
    return exit_ok;
}

// ---------------------------------------------------------------------------
// claims / scan
// ---------------------------------------------------------------------------

int cmd_claims(const std::string& format, const std::string& out_path) {
    const std::vector<mathieu::ClaimVerdict> verdicts = mathieu::run_claims();
    std::string text;
    if (format == "md") {
        text = mathieu::render_claims_markdown(verdicts);
    } else if (format == "json") {
        text = mathieu::render_claims_json(verdicts);
    } else if (format == "csv") {
        text = mathieu::render_claims_csv(verdicts);
    } else {
        throw UsageError("--format must be md, json, or csv");
    }
    write_output(text, out_path);
    return exit_ok;
}

int cmd_scan(const std::string& series, double h_min, double h_max, int steps,
             double tol, const std::string& out_path) {
    if (steps < 2) {
        throw UsageError("--steps must be at least 2");
    }
    if (!(h_min >= 0.0) || !(h_max > h_min)) {
        throw UsageError("requires 0 <= --h-min < --h-max");
    }
    const mathieu::ScanSeries which =
        series == "F" ? mathieu::ScanSeries::F : mathieu::ScanSeries::S;
    const std::vector<mathieu::ScanRow> rows =
        mathieu::scan_series(which, h_min, h_max, steps, tol);
    write_output(mathieu::render_scan_csv(rows), out_path);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified evaluation and claim verification for the series "
                 "F(h) = sum n/(n^2+h)^2 and its alternating and generalized "
                 "variants"};
    app.require_subcommand(1);

    // eval ------------------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "Evaluate a series with a certified enclosure");
    // The parameter option is spelled --h, so this subcommand cannot keep the
    // default -h short help flag.
    eval->set_help_flag("--help", "Print this help message and exit");
    std::string eval_series;
    std::string eval_method;
    double eval_h = 0.0;
    double eval_mu = 2.0;
    double eval_tol = 1e-10;
    std::string eval_out;
    eval->add_option("series", eval_series, "Series: F, S, or Fmu")
        ->required()
        ->check(CLI::IsMember({"F", "S", "Fmu"}));
    eval->add_option("method", eval_method,
                     "Method: direct, integral, integral-parts, or expansion")
        ->required()
        ->check(CLI::IsMember({"direct", "integral", "integral-parts", "expansion"}));
    eval->add_option("--h", eval_h, "Series parameter h")->required();
    eval->add_option("--mu", eval_mu, "Exponent mu for Fmu (must be > 1)");
    eval->add_option("--tol", eval_tol, "Enclosure half-width target, in (0, 1e-2]");
    eval->add_option("--out", eval_out, "Write the result to this file instead of stdout");

    // coeffs ----------------------------------------------------------------
    auto* coeffs = app.add_subcommand(
        "coeffs", "Print exact Taylor coefficients of the kernel-derivative numerator");
    int coeffs_order = 12;
    std::string coeffs_out;
    coeffs->add_option("--order", coeffs_order, "Highest power to print (>= 5)");
    coeffs->add_option("--out", coeffs_out, "Write to this file instead of stdout");

    // claims ----------------------------------------------------------------
    auto* claims = app.add_subcommand(
        "claims", "Recompute the claim-verification report (C1..C10)");
    std::string claims_format = "md";
    std::string claims_out;
    claims->add_option("--format", claims_format, "Output format: md, json, or csv")
        ->check(CLI::IsMember({"md", "json", "csv"}));
    claims->add_option("--out", claims_out, "Write to this file instead of stdout");

    // scan ------------------------------------------------------------------
    auto* scan = app.add_subcommand("scan", "Tabulate a series over [h-min, h-max] as CSV");
    std::string scan_series_name;
    double scan_h_min = 0.0;
    double scan_h_max = 0.0;
    int scan_steps = 0;
    double scan_tol = 1e-9;
    std::string scan_out;
    scan->add_option("series", scan_series_name, "Series: F or S")
        ->required()
        ->check(CLI::IsMember({"F", "S"}));
    scan->add_option("--h-min", scan_h_min, "Left endpoint (>= 0)")->required();
    scan->add_option("--h-max", scan_h_max, "Right endpoint (> h-min)")->required();
    scan->add_option("--steps", scan_steps, "Number of grid points (>= 2)")->required();
    scan->add_option("--tol", scan_tol, "Enclosure half-width target per point");
    scan->add_option("--out", scan_out, "Write CSV to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message
        return exit_usage;
    }

    try {
        if (eval->parsed()) {
            return cmd_eval(eval_series, eval_method, eval_h, eval_mu, eval_tol, eval_out);
        }
        if (coeffs->parsed()) {
            return cmd_coeffs(coeffs_order, coeffs_out);
        }
        if (claims->parsed()) {
            return cmd_claims(claims_format, claims_out);
        }
        if (scan->parsed()) {
            return cmd_scan(scan_series_name, scan_h_min, scan_h_max, scan_steps,
                            scan_tol, scan_out);
        }
        std::cerr << "error: no subcommand given\n";
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return exit_io;
    } catch (const mathieu::ToleranceUnreachable& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return exit_numeric;
    } catch (const mathieu::QuadratureDivergence& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return exit_numeric;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numeric;
    }
}
