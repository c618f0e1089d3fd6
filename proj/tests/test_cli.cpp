#include "subprocess.hpp"

#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string cli() { return std::string(MATHIEU_CLI_PATH); }

testutil::CommandResult run(const std::string& args) {
    return testutil::run_command(cli() + " " + args);
}

} // namespace

TEST_CASE("eval prints a deterministic certified result") {
    const auto r = run("eval F direct --h 1 --tol 1e-10");
    CHECK(r.exit_code == 0);
    // The midpoint is only as accurate as the requested half-width (1e-10),
    // so match the certain leading digits.
    CHECK(r.output.find("value: 0.397116771") != std::string::npos);
    CHECK(r.output.find("method: direct") != std::string::npos);
    CHECK(r.output.find("half_width: ") != std::string::npos);
    CHECK(r.output.find("terms_used: ") != std::string::npos);

    // Byte-identical on reruns.
    const auto again = run("eval F direct --h 1 --tol 1e-10");
    CHECK(again.output == r.output);
}

TEST_CASE("eval understands every series/method pair it advertises") {
    CHECK(run("eval F integral --h 2").exit_code == 0);
    CHECK(run("eval F integral-parts --h 2").exit_code == 0);
    CHECK(run("eval F expansion --h 0.5").exit_code == 0);
    CHECK(run("eval S direct --h 1").exit_code == 0);
    CHECK(run("eval S integral --h 1").exit_code == 0);
    CHECK(run("eval S expansion --h 0.5").exit_code == 0);
    CHECK(run("eval Fmu direct --h 1 --mu 3").exit_code == 0);
}

TEST_CASE("usage errors exit with 2") {
    // Expansion outside its radius of convergence.
    const auto exp = run("eval F expansion --h 1.5");
    CHECK(exp.exit_code == 2);
    CHECK(exp.output.find("usage error") != std::string::npos);

    // Method/series combinations that do not exist.
    CHECK(run("eval Fmu integral --h 1 --mu 1.5").exit_code == 2);
    CHECK(run("eval S integral-parts --h 1").exit_code == 2);
    // mu outside (1, inf).
    CHECK(run("eval Fmu direct --h 1 --mu 0.5").exit_code == 2);
    // Domain violations.
    CHECK(run("eval F direct --h -1").exit_code == 2);
    CHECK(run("eval F integral --h 0").exit_code == 2);
    // Malformed invocations.
    CHECK(run("--definitely-not-a-flag").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("eval F bogus-method --h 1").exit_code == 2);
    CHECK(run("claims --format bogus").exit_code == 2);
    CHECK(run("scan F --h-min 0 --h-max 1 --steps 1").exit_code == 2);
    CHECK(run("scan F --h-min 3 --h-max 1 --steps 10").exit_code == 2);
    CHECK(run("coeffs --order 4").exit_code == 2);
}

TEST_CASE("numeric failures exit with 3") {
    const auto r = run("eval F direct --h 1 --tol 1e-18");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("numeric error") != std::string::npos);
}

TEST_CASE("unwritable output path exits with 4") {
    const auto r =
        run("scan F --h-min 1 --h-max 2 --steps 3 --out /nonexistent-dir/x.csv");
    CHECK(r.exit_code == 4);
    CHECK(r.output.find("i/o error") != std::string::npos);
}

TEST_CASE("help is a successful invocation") {
    const auto r = run("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("eval") != std::string::npos);
    CHECK(r.output.find("claims") != std::string::npos);
    const auto sub = run("eval --help");
    CHECK(sub.exit_code == 0);
}

TEST_CASE("coeffs prints exact fractions and the normalized bracket") {
    const auto r = run("coeffs --order 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("x^5: -1/30") != std::string::npos);
    CHECK(r.output.find("x^6: -1/30") != std::string::npos);
    CHECK(r.output.find("x^7: -23/1260") != std::string::npos);
    CHECK(r.output.find("x^8: -1/140") != std::string::npos);
    CHECK(r.output.find("normalized: -x^5/30 * [") != std::string::npos);
    CHECK(r.output.find("23/42") != std::string::npos);
}

TEST_CASE("scan emits CSV with the monotonicity trailer") {
    const auto r = run("scan F --h-min 1 --h-max 3 --steps 5 --tol 1e-8");
    CHECK(r.exit_code == 0);
    std::istringstream is(r.output);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "h,value,half_width");
    std::vector<double> values;
    std::string last;
    while (std::getline(is, line)) {
        last = line;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        values.push_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
    }
    REQUIRE(values.size() == 5);
    for (size_t i = 1; i < values.size(); ++i) {
        CHECK(values[i] < values[i - 1]);
    }
    CHECK(last.rfind("# ", 0) == 0);
    CHECK(last.find("monotone_within_certification=true") != std::string::npos);
}

TEST_CASE("eval writes to a file when asked") {
    const std::string path = "/tmp/mathieu_cli_eval_out.txt";
    std::remove(path.c_str());
    const auto r = run("eval F direct --h 0.5 --out " + path);
    CHECK(r.exit_code == 0);
    const auto shown = testutil::run_command("cat " + path);
    CHECK(shown.exit_code == 0);
    CHECK(shown.output.find("value: 0.614965706") != std::string::npos);
    std::remove(path.c_str());
}
