#pragma once

#include "qcc/experiments.hpp"

#include <limits>

namespace qcc {

// Thresholds and knobs of the validation suite. The defaults are the
// tolerances the test suite holds the build to; quick() caps the oracle
// comparison span for speed (smoke runs only).
struct ValidationProfile {
    double tol_initial = 1e-12;
    double tol_constraint = 1e-9;
    double tol_emp_residual = 1e-9;
    double tol_continuity = 1e-9;
    double tol_oracle = 1e-6;
    double oracle_step = 1e-4;
    double tol_early_time = 1e-3;
    double tol_closed_form = 1e-10;
    double tol_revival = 1e-10;
    double revival_ratio_tol = 0.05;
    double tol_rest_slope = 1e-3;
    double min_policy_jump = 0.01;
    double derivative_jump_factor = 10.0;
    double tol_branch_continuity = 1e-4;
    int emp_residual_samples = 10000;
    // caps the oracle comparison span per preset; infinity = full grid
    double oracle_t_cap = std::numeric_limits<double>::infinity();

    static ValidationProfile defaults() { return {}; }
    static ValidationProfile quick();
};

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    // wall-clock spent in the oracle comparison; not part of the serialized
    // report so repeated runs stay byte-identical
    double oracle_seconds = 0.0;

    bool all_pass() const;
    const CheckResult& check(const std::string& name) const;
};

ValidationReport run_validation_suite(const ValidationProfile& profile);

std::string validation_report_json(const ValidationReport& report, const ValidationProfile& profile);

}
