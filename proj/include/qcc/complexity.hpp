#pragma once

#include "qcc/emp.hpp"

namespace qcc {

// Which eigenvalue fills the free slots of the per-mode phase functions.
// FixedInitial pins every slot to lambda_j(0), which keeps the complexity
// zero at t = 0 and continuous across quenches. LiteralSegment substitutes
// the current segment's eigenvalue from the second segment onward (the two
// conventions coincide on the first segment and hence on any single quench);
// it makes the complexity jump wherever the slot eigenvalue changes and is
// kept to probe that discontinuity.
enum class LambdaPolicy {
    FixedInitial,
    LiteralSegment,
};

LambdaPolicy parse_lambda_policy(const std::string& name);
const char* lambda_policy_name(LambdaPolicy policy);

// Evaluation side at a quench boundary: Right (default) follows the
// boundary-belongs-to-the-later-segment convention, Left gives the limit
// from below.
enum class Side {
    Left,
    Right,
};

// Complex Gaussian frequency Omega = sqrt(lambda0)/b^2 - i bdot/b.
struct OmegaValue {
    double re = 0.0;   // > 0 for any valid state
    double im = 0.0;
};

OmegaValue omega_value(const AuxiliaryState& state, double lambda0);

struct PhasePair {
    double a = 0.0;
    double b = 0.0;
};

// A = ln[sqrt((b bdot)^2 + slot) / (sqrt(lambda0) b^2)]
// B = arctan[(b bdot) / sqrt(slot)]  (principal branch; saturates to
//     +-pi/2 when a literal slot vanishes on a critical segment)
PhasePair mode_phase_functions(const AuxiliaryState& state, double lambda0, double lambda_slot);

struct ComplexityBreakdown {
    double total = 0.0;
    double zero_mode = 0.0;   // mode j = N
    double rest = 0.0;        // modes j = 1..N-1; total^2 = zero_mode^2 + rest^2
    // Per-mode (A_j, B_j); filled on request only.
    std::vector<PhasePair> modes;
    // True when the two-term arctan denominator of some successive-quench
    // mode went negative at this sample (phase separation beyond pi/2).
    bool atan_denominator_negative = false;
};

struct ComplexityBounds {
    double lower = 0.0;
    double upper = 0.0;
};

struct EarlyTimeCoefficients {
    double a2 = 0.0;
    double a4 = 0.0;
};

// Builds the per-mode solutions of a schedule once and evaluates complexity
// quantities at arbitrary times. Immutable after construction.
class ComplexityEvaluator {
public:
    ComplexityEvaluator(QuenchSchedule schedule, LambdaPolicy policy);

    const QuenchSchedule& schedule() const { return schedule_; }
    LambdaPolicy policy() const { return policy_; }
    int n_modes() const { return schedule_.spec.n_oscillators; }
    double lambda0(int j) const { return modes_[static_cast<size_t>(j) - 1].lambda0; }
    const ModeSolution& mode_solution(int j) const { return modes_[static_cast<size_t>(j) - 1]; }

    // Segment index holding t, honouring the requested side at boundaries.
    int locate(double t, Side side) const;

    // (b^2, b*bdot) of mode j at global time t.
    std::pair<double, double> b2_d(int j, double t, Side side = Side::Right) const;

    PhasePair phase(int j, double t, Side side = Side::Right) const;

    ComplexityBreakdown at(double t, Side side = Side::Right, bool with_modes = false) const;

    // Complexity of the state at t against the reference state at t0, both
    // inside the window [t0, end of the segment after t0's].
    ComplexityBreakdown successive(double t0, double t, bool with_modes = false) const;

    // Sandwich C_0(t) <= C(t) <= C_u(t) for a single quench. The zero mode
    // enters exactly; every other mode contributes its per-mode suprema
    // |ln(lambda_j/lambda_j(0))| and arctan[|lambda_j - lambda_j(0)| /
    // (2 sqrt(lambda_j lambda_j(0)))].
    ComplexityBounds bounds(double t) const;

    // C_i^2 at the start of segment i (the finite zeroth-order offset of the
    // post-quench expansion); zero for i = 1.
    double offset_a0(int segment_index) const;

    // Eigenvalue slot of segment i for mode j under this evaluator's policy.
    double lambda_slot(int segment_index, int j) const;

private:
    QuenchSchedule schedule_;
    LambdaPolicy policy_;
    std::vector<ModeSolution> modes_;
    std::vector<double> upper_terms_;   // per-mode A_sup^2 + B_sup^2, single quench only
};

// One-shot wrappers over ComplexityEvaluator.
ComplexityBreakdown total_complexity(const QuenchSchedule& schedule, double t,
                                     LambdaPolicy policy = LambdaPolicy::FixedInitial);
ComplexityBounds complexity_bounds(const QuenchSchedule& schedule, double t,
                                   LambdaPolicy policy = LambdaPolicy::FixedInitial);
ComplexityBreakdown successive_complexity(const QuenchSchedule& schedule, double t0, double t,
                                          LambdaPolicy policy = LambdaPolicy::FixedInitial);
double multi_quench_offset(const QuenchSchedule& schedule, int segment_index,
                           LambdaPolicy policy = LambdaPolicy::FixedInitial);

// Zero-mode complexity of a quench to omega = 0:
// sqrt[ ln^2(1 + t^2 w^2)/16 + arctan^2(w t)/4 ].
double critical_zero_mode_closed_form(double omega_i, double t);

// Leading coefficients of C^2 just after the first quench. a2 is the exact
// t^2 coefficient; a4 is reported with the conventional positive sign, the
// t^4 term of C^2 being -a4 t^4 (see the tests).
EarlyTimeCoefficients early_time_coefficients(const ChainSpec& spec,
                                              const QuenchSegment& first_segment);

// First-order response of one mode's (A, B) to a frequency shift
// omega_i -> omega_i + delta at fixed coupling. Vanishes identically when
// omega_i = 0.
PhasePair perturbative_delta_response(double lambda0, double omega_i, double delta, double t);

// Deterministic pairwise reduction in fixed index order.
double pairwise_sum(const double* v, size_t n);

// Breakdown straight from per-mode auxiliary states (used to turn the
// numerically integrated states into complexity). slots[j-1] is the
// eigenvalue slot of mode j; pass lambda0 for the FixedInitial convention.
ComplexityBreakdown breakdown_from_states(const std::vector<AuxiliaryState>& states,
                                          const std::vector<double>& lambda0,
                                          const std::vector<double>& slots);
ComplexityBreakdown successive_from_states(const std::vector<AuxiliaryState>& reference,
                                           const std::vector<AuxiliaryState>& target,
                                           const std::vector<double>& slots_reference,
                                           const std::vector<double>& slots_target);

}
