#pragma once

#include "qcc/chain.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace qcc {

struct AuxiliaryState {
    double b = 1.0;      // always > 0
    double b_dot = 0.0;
};

// Closed-form solution of the auxiliary equation
//     b'' + lambda b - lambda0 / b^3 = 0
// on one segment where lambda is constant. With two classical solutions of
// unit Wronskian, g1 = cos(sqrt(lambda) tau) and g2 = sin(sqrt(lambda) tau)
// / sqrt(lambda) (g1 = 1, g2 = tau in the massless branch),
//
//     b^2(tau) = b2_0 g1^2 + 2 bdb_0 g1 g2 + quad g2^2 .
//
// b2_0 and bdb_0 are b^2 and b*bdot at the segment start, so continuity
// across quenches holds by construction, and
//
//     b2_0 * quad - bdb_0^2 = lambda0
//
// on every segment. Storing this triple instead of the oscillatory
// amplitudes keeps the constraint well conditioned when lambda0/lambda is
// large (deep down-quenches) and makes the massless limit the literal
// lambda -> 0 limit of the same numbers.
struct SegmentConstants {
    double b2_0 = 1.0;
    double bdb_0 = 0.0;
    double quad = 0.0;
    bool degenerate = false;   // lambda_seg <= lambda_epsilon

    // Oscillatory-amplitude view, b^2 = alpha cos(2y) + beta sin(2y) + gamma
    // with y = sqrt(lambda) tau. Only meaningful off the massless branch.
    double alpha(double lambda_seg) const { return 0.5 * (b2_0 - quad / lambda_seg); }
    double beta(double lambda_seg) const { return bdb_0 / std::sqrt(lambda_seg); }
    double gamma(double lambda_seg) const { return 0.5 * (b2_0 + quad / lambda_seg); }

    // Polynomial view of the massless branch, b^2 = a0 + 2 a1 tau + a2 tau^2.
    double a0() const { return b2_0; }
    double a1() const { return bdb_0; }
    double a2() const { return quad; }

    static SegmentConstants from_alpha_beta_gamma(double alpha, double beta, double gamma,
                                                  double lambda_seg);
    static SegmentConstants from_poly(double a0, double a1, double a2);
};

struct ModeSolution {
    struct Segment {
        SegmentConstants constants;
        double lambda = 0.0;
        std::optional<double> duration;
    };

    int mode = 1;
    double lambda0 = 0.0;   // lambda_j(0), pinned by the pre-quench chain
    std::vector<Segment> segments;
};

// Constants of the first segment from b(0) = 1, bdot(0) = 0.
SegmentConstants initial_segment_constants(double lambda0, double lambda_seg);

// (b^2, b*bdot) at local time tau; the workhorse behind evaluate_auxiliary.
std::pair<double, double> evaluate_b2_d(const SegmentConstants& c, double lambda_seg, double tau);

AuxiliaryState evaluate_auxiliary(const SegmentConstants& c, double lambda_seg, double tau);

// Next segment's constants from continuity of (b, bdot) at the boundary.
SegmentConstants propagate_constants(const SegmentConstants& prev, double lambda_prev,
                                     double lambda_next, double lambda0, double boundary_tau);

// Chains initial_segment_constants and propagate_constants over the whole
// schedule for mode j.
ModeSolution build_mode_solution(const QuenchSchedule& schedule, int j);

// |gamma^2 - beta^2 - alpha^2 - lambda0/lambda| off the massless branch,
// |a0 a2 - a1^2 - lambda0| on it.
double wronskian_invariant_residual(const SegmentConstants& c, double lambda_seg, double lambda0);

// |b'' + lambda b - lambda0/b^3| of the closed form at local time tau.
double emp_equation_residual(const SegmentConstants& c, double lambda_seg, double lambda0,
                             double tau);

}
