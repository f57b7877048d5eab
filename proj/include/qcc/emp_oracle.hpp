#pragma once

#include "qcc/emp.hpp"

namespace qcc {

struct InstabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Brute-force check on the closed-form solutions: integrates
// b'' + lambda_j(t) b - lambda_j(0)/b^3 = 0 from (b, bdot) = (1, 0) with a
// classical fixed-step fourth-order Runge-Kutta scheme. lambda_j(t) is
// piecewise constant and substeps are aligned to segment boundaries exactly,
// so no step straddles a quench.
AuxiliaryState integrate_emp_oracle(const QuenchSchedule& schedule, int j, double t_end,
                                    double step);

// Same integration carried over all modes at once, recording the state of
// every mode at each requested time (ascending, starting at >= 0).
// Returns states[k][j-1] for record time k.
std::vector<std::vector<AuxiliaryState>> integrate_emp_oracle_grid(
    const QuenchSchedule& schedule, const std::vector<double>& times, double step);

}
