#include "qcc/emp.hpp"

#include <cmath>

namespace qcc {

SegmentConstants SegmentConstants::from_alpha_beta_gamma(double alpha, double beta, double gamma,
                                                         double lambda_seg) {
    if (lambda_seg <= lambda_epsilon)
        throw std::invalid_argument(
            "SegmentConstants::from_alpha_beta_gamma: lambda_seg is on the massless branch");
    SegmentConstants c;
    c.b2_0 = alpha + gamma;
    c.bdb_0 = beta * std::sqrt(lambda_seg);
    c.quad = (gamma - alpha) * lambda_seg;
    c.degenerate = false;
    return c;
}

SegmentConstants SegmentConstants::from_poly(double a0, double a1, double a2) {
    SegmentConstants c;
    c.b2_0 = a0;
    c.bdb_0 = a1;
    c.quad = a2;
    c.degenerate = true;
    return c;
}

SegmentConstants initial_segment_constants(double lambda0, double lambda_seg) {
    if (!(lambda0 > 0))
        throw std::invalid_argument("initial_segment_constants: lambda0 must be > 0");
    if (lambda_seg < 0)
        throw std::invalid_argument("initial_segment_constants: lambda_seg must be >= 0");
    SegmentConstants c;
    c.b2_0 = 1.0;
    c.bdb_0 = 0.0;
    c.quad = lambda0;
    c.degenerate = lambda_seg <= lambda_epsilon;
    return c;
}

std::pair<double, double> evaluate_b2_d(const SegmentConstants& c, double lambda_seg, double tau) {
    if (tau < 0)
        throw std::invalid_argument("evaluate_b2_d: tau must be >= 0");
    const bool massless = lambda_seg <= lambda_epsilon;
    if (massless != c.degenerate)
        throw ConsistencyError("evaluate_b2_d: constants branch does not match lambda_seg");

    double b2, d;
    if (massless) {
        b2 = c.b2_0 + (2.0 * c.bdb_0 + c.quad * tau) * tau;
        d = c.bdb_0 + c.quad * tau;
    } else {
        const double sl = std::sqrt(lambda_seg);
        const double y = sl * tau;
        const double cy = std::cos(y);
        const double sy = std::sin(y);
        const double g2 = sy / sl;
        b2 = c.b2_0 * cy * cy + 2.0 * c.bdb_0 * cy * g2 + c.quad * g2 * g2;
        // b*bdot = bdb_0 cos(2y) + sin(2y) (quad - b2_0 lambda) / (2 sqrt(lambda))
        d = c.bdb_0 * (cy * cy - sy * sy) + sy * cy * (c.quad - c.b2_0 * lambda_seg) / sl;
    }
    if (!(b2 > 0))
        throw ConsistencyError("evaluate_b2_d: non-positive b^2");
    return {b2, d};
}

AuxiliaryState evaluate_auxiliary(const SegmentConstants& c, double lambda_seg, double tau) {
    const auto [b2, d] = evaluate_b2_d(c, lambda_seg, tau);
    AuxiliaryState state;
    state.b = std::sqrt(b2);
    state.b_dot = d / state.b;
    return state;
}

SegmentConstants propagate_constants(const SegmentConstants& prev, double lambda_prev,
                                     double lambda_next, double lambda0, double boundary_tau) {
    const auto [b2, d] = evaluate_b2_d(prev, lambda_prev, boundary_tau);
    if (!(b2 > 0))
        throw ConsistencyError("propagate_constants: non-positive b^2 at the boundary");
    SegmentConstants next;
    next.b2_0 = b2;
    next.bdb_0 = d;
    next.quad = (lambda0 + d * d) / b2;
    next.degenerate = lambda_next <= lambda_epsilon;
    return next;
}

ModeSolution build_mode_solution(const QuenchSchedule& schedule, int j) {
    const int n = schedule.spec.n_oscillators;
    if (j < 1 || j > n)
        throw std::invalid_argument("build_mode_solution: mode index out of range");

    const ModeSpectrum pre =
        mode_eigenvalues(schedule.spec.omega0, schedule.spec.coupling0, n);
    ModeSolution solution;
    solution.mode = j;
    solution.lambda0 = pre.lambda(j);
    if (!(solution.lambda0 > lambda_epsilon))
        throw std::invalid_argument("build_mode_solution: lambda_j(0) must be positive");

    solution.segments.reserve(schedule.segments.size());
    SegmentConstants constants{};
    double prev_lambda = 0.0;
    for (size_t i = 0; i < schedule.segments.size(); ++i) {
        const QuenchSegment& seg = schedule.segments[i];
        const double lam = mode_eigenvalues(seg.omega, seg.coupling, n).lambda(j);
        if (i == 0) {
            constants = initial_segment_constants(solution.lambda0, lam);
        } else {
            const double dur = *schedule.segments[i - 1].duration;
            constants = propagate_constants(constants, prev_lambda, lam, solution.lambda0, dur);
        }
        solution.segments.push_back({constants, lam, seg.duration});
        prev_lambda = lam;
    }
    return solution;
}

double wronskian_invariant_residual(const SegmentConstants& c, double lambda_seg, double lambda0) {
    const double defect = c.b2_0 * c.quad - c.bdb_0 * c.bdb_0 - lambda0;
    if (c.degenerate)
        return std::abs(defect);
    // gamma^2 - beta^2 - alpha^2 = (b2_0 quad - bdb_0^2) / lambda
    return std::abs(defect / lambda_seg);
}

double emp_equation_residual(const SegmentConstants& c, double lambda_seg, double lambda0,
                             double tau) {
    const auto [f, d] = evaluate_b2_d(c, lambda_seg, tau);   // f = b^2, d = b bdot
    double half_f2;                                          // f''/2
    const bool massless = lambda_seg <= lambda_epsilon;
    if (massless) {
        half_f2 = c.quad;
    } else {
        const double sl = std::sqrt(lambda_seg);
        const double y = sl * tau;
        const double c2y = std::cos(2.0 * y);
        const double s2y = std::sin(2.0 * y);
        half_f2 = -2.0 * c.bdb_0 * sl * s2y + c2y * (c.quad - c.b2_0 * lambda_seg);
    }
    const double lambda_eff = massless ? 0.0 : lambda_seg;
    const double b = std::sqrt(f);
    // b'' = (f''/2 - bdot^2)/b with bdot^2 = d^2/f
    return std::abs((half_f2 - d * d / f) / b + lambda_eff * b - lambda0 / (f * b));
}

}
