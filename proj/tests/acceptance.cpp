// Acceptance suite: runs every acceptance criterion at its pinned tolerance
// and prints one pass/fail line per criterion. Exits nonzero if any fails.

#include "qcc/emit.hpp"
#include "qcc/emp_oracle.hpp"
#include "qcc/validation.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace qcc;

namespace {

constexpr double pi = 3.1415926535897932384626433832795;

struct Criterion {
    int number;
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<Criterion> results;

void record(int number, const std::string& name, bool pass, const std::string& detail) {
    results.push_back({number, name, pass, detail});
    std::printf("criterion %02d %-24s : %s  (%s)\n", number, name.c_str(),
                pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

std::string run_cli(const std::string& args, const std::string& out_file) {
    const std::string cmd = std::string(QCC_CLI_PATH) + " " + args + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    if (rc != 0)
        return {};
    std::ifstream file(out_file, std::ios::binary);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}

int main() {
    std::printf("running the validation suite (default tolerances, oracle step 1e-4)...\n");
    const ValidationProfile profile = ValidationProfile::defaults();
    const ValidationReport report = run_validation_suite(profile);

    // 1. oracle equivalence on every preset grid, under the runtime budget
    {
        const CheckResult& c = report.check("oracle_equivalence");
        const bool in_budget = report.oracle_seconds < 60.0;
        record(1, "oracle-equivalence", c.pass && in_budget,
               "max |dC| = " + fmt(c.measured) + " <= 1e-6; " + fmt(report.oracle_seconds) +
                   " s < 60 s");
    }

    // 2. initial conditions: C(0) = 0 on every preset, identity quench flat
    {
        const CheckResult& c = report.check("initial_conditions");
        record(2, "initial-conditions", c.pass, "max C = " + fmt(c.measured) + " <= 1e-12");
    }

    // 3. Wronskian constraint on every segment of every preset
    {
        const CheckResult& c = report.check("constraint_conservation");
        record(3, "constraint-conservation", c.pass,
               "max residual = " + fmt(c.measured) + " <= 1e-9");
    }

    // 4. continuity across the boundaries of fig5, fig7, fig11
    {
        const CheckResult& c = report.check("boundary_continuity");
        record(4, "boundary-continuity", c.pass, "max gap = " + fmt(c.measured) + " <= 1e-9");
    }

    // 5. early-time series plus the hand-evaluated N = 1 coefficients
    {
        const CheckResult& c = report.check("early_time_series");
        const EarlyTimeCoefficients co =
            early_time_coefficients(ChainSpec{1, 3.0, 0.0}, QuenchSegment{5.0, 0.0, {}});
        const bool hand = std::abs(co.a2 / (256.0 / 36.0) - 1.0) < 1e-10 &&
                          std::abs(co.a4 / (256.0 * 2180.0 / (48.0 * 81.0)) - 1.0) < 1e-10;
        record(5, "early-time-series", c.pass && hand,
               "ratio error " + fmt(c.measured) + " <= 1e-3; a2 = " + fmt(co.a2) +
                   ", a4 = " + fmt(co.a4));
    }

    // 6. zero bound violations on fig1 and fig2
    {
        const CheckResult& c = report.check("bounds_sweep");
        record(6, "bounds", c.pass, fmt(c.measured) + " violations; " + c.detail);
    }

    // 7. critical quench: closed form, bounded remainder, isolated zero mode
    {
        const CheckResult& c = report.check("critical_quench");
        const QuenchSchedule isolated =
            QuenchSchedule::make(ChainSpec{1, 0.2, 0.0}, {QuenchSegment{0.0, 0.0, {}}});
        const double at_unit = total_complexity(isolated, 5.0).total;
        const bool hand = std::abs(at_unit - 0.42923) < 1e-5;
        record(7, "critical-quench", c.pass && hand,
               c.detail + "; C(1/w) = " + fmt(at_unit) + " ~ 0.42923");
    }

    // 8. revivals: per-mode zeros and the fig1 period ratio
    {
        const CheckResult& zeros = report.check("mode_revivals");
        const CheckResult& scaling = report.check("revival_scaling");
        record(8, "mode-revivals", zeros.pass && scaling.pass,
               "per-mode residual " + fmt(zeros.measured) + " <= 1e-10; " + scaling.detail);
    }

    // 9. residual complexity after the return quench plus N = 1 hand cases
    {
        const CheckResult& c = report.check("residual_complexity");
        const QuenchSchedule quarter = QuenchSchedule::make(
            ChainSpec{1, 3.0, 0.0},
            {QuenchSegment{5.0, 0.0, pi / 20.0}, QuenchSegment{3.0, 0.0, {}}});
        const double a20_quarter = multi_quench_offset(quarter, 2);
        const QuenchSchedule full = QuenchSchedule::make(
            ChainSpec{1, 3.0, 0.0},
            {QuenchSegment{5.0, 0.0, pi / 5.0}, QuenchSegment{3.0, 0.0, {}}});
        const double a20_full = multi_quench_offset(full, 2);
        const bool hand = std::abs(a20_quarter - 0.12525) < 1e-4 && a20_full <= 1e-12;
        record(9, "residual-complexity", c.pass && hand,
               c.detail + "; N=1 a_20 = " + fmt(a20_quarter) + " ~ 0.12525, full period " +
                   fmt(a20_full));
    }

    // 10. successive-quench rise plus the N = 1 hand value
    {
        const CheckResult& c = report.check("successive_rise");
        const QuenchSchedule n1 =
            QuenchSchedule::make(ChainSpec{1, 3.0, 0.0}, {QuenchSegment{5.0, 0.0, {}}});
        const double cs = successive_complexity(n1, pi / 20.0, pi / 10.0).total;
        const bool hand = std::abs(cs - 0.35391) < 1e-5;
        record(10, "successive-rise", c.pass && hand,
               "worst post-pre drop " + fmt(c.measured) + " <= 0; C_s = " + fmt(cs) +
                   " ~ 0.35391");
    }

    // 11. crossover between the fig11 quench pairs
    {
        const CheckResult& c = report.check("crossover");
        record(11, "crossover", c.pass, c.detail);
    }

    // 12. policy contrast at the critical final quench of fig7
    {
        const CheckResult& c = report.check("policy_contrast");
        record(12, "policy-contrast", c.pass, c.detail);
    }

    // 13. CLI determinism: byte-identical output across repeated invocations
    {
        bool pass = true;
        std::string detail;
        const std::string tmp = "acceptance_tmp_out";
        const std::vector<std::pair<std::string, std::string>> runs = {
            {"figure fig5 --quiet --format csv --out ", "fig5.csv"},
            {"figure fig9 --variant 2 --quiet --format json --out ", "fig9.json"},
            {"figure fig3 --variant 1 --quiet --grid 0:40:101 --format csv --out ", "fig3.csv"},
        };
        for (const auto& [args, name] : runs) {
            const std::string path_a = tmp + "_a_" + name;
            const std::string path_b = tmp + "_b_" + name;
            const std::string a = run_cli(args + path_a, path_a);
            const std::string b = run_cli(args + path_b, path_b);
            if (a.empty() || a != b) {
                pass = false;
                detail += name + " differs; ";
            }
            std::remove(path_a.c_str());
            std::remove(path_b.c_str());
        }
        if (pass)
            detail = "figure fig5/fig9/fig3 emitted twice, byte-identical";
        record(13, "cli-determinism", pass, detail);
    }

    int failed = 0;
    for (const Criterion& c : results)
        if (!c.pass)
            ++failed;
    std::printf("%zu criteria, %d failed\n", results.size(), failed);
    return failed == 0 ? 0 : 1;
}
