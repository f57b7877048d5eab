#include "qcc/complexity.hpp"

#include <cmath>
#include <limits>

namespace qcc {

namespace {

constexpr double half_pi = 1.5707963267948966192313216916398;

PhasePair phase_from_b2_d(double b2, double d, double lambda0, double slot) {
    PhasePair p;
    p.a = std::log(std::sqrt(slot + d * d) / (std::sqrt(lambda0) * b2));
    if (slot > 0)
        p.b = std::atan(d / std::sqrt(slot));
    else
        p.b = d == 0 ? 0.0 : std::copysign(half_pi, d);
    return p;
}

ComplexityBreakdown breakdown_from_terms(const std::vector<double>& terms) {
    ComplexityBreakdown r;
    const size_t n = terms.size();
    const double s_zero = terms[n - 1];
    const double s_rest = n > 1 ? pairwise_sum(terms.data(), n - 1) : 0.0;
    r.total = 0.5 * std::sqrt(s_rest + s_zero);
    r.zero_mode = 0.5 * std::sqrt(s_zero);
    r.rest = 0.5 * std::sqrt(s_rest);
    return r;
}

}

double pairwise_sum(const double* v, size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (size_t i = 0; i < n; ++i)
            s += v[i];
        return s;
    }
    const size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

LambdaPolicy parse_lambda_policy(const std::string& name) {
    if (name == "fixed-initial")
        return LambdaPolicy::FixedInitial;
    if (name == "literal-segment")
        return LambdaPolicy::LiteralSegment;
    throw ConfigError("unknown policy '" + name + "' (expected fixed-initial or literal-segment)");
}

const char* lambda_policy_name(LambdaPolicy policy) {
    return policy == LambdaPolicy::FixedInitial ? "fixed-initial" : "literal-segment";
}

OmegaValue omega_value(const AuxiliaryState& state, double lambda0) {
    if (!(state.b > 0))
        throw std::invalid_argument("omega_value: b must be > 0");
    OmegaValue w;
    w.re = std::sqrt(lambda0) / (state.b * state.b);
    w.im = -state.b_dot / state.b;
    return w;
}

PhasePair mode_phase_functions(const AuxiliaryState& state, double lambda0, double lambda_slot) {
    if (!(state.b > 0))
        throw std::invalid_argument("mode_phase_functions: b must be > 0");
    if (!(lambda0 > 0))
        throw std::invalid_argument("mode_phase_functions: lambda0 must be > 0");
    return phase_from_b2_d(state.b * state.b, state.b * state.b_dot, lambda0, lambda_slot);
}

ComplexityEvaluator::ComplexityEvaluator(QuenchSchedule schedule, LambdaPolicy policy)
    : schedule_(std::move(schedule)), policy_(policy) {
    const int n = schedule_.spec.n_oscillators;
    modes_.reserve(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j)
        modes_.push_back(build_mode_solution(schedule_, j));

    if (schedule_.n_segments() == 1) {
        // per-mode suprema for the single-quench sandwich; mode N excluded
        upper_terms_.resize(static_cast<size_t>(n > 0 ? n - 1 : 0));
        for (int j = 1; j < n; ++j) {
            const double l0 = modes_[static_cast<size_t>(j) - 1].lambda0;
            const double l = modes_[static_cast<size_t>(j) - 1].segments[0].lambda;
            double a_sup, b_sup;
            if (l <= lambda_epsilon) {
                // massless non-zero mode: b grows without bound, as does A
                a_sup = std::numeric_limits<double>::infinity();
                b_sup = half_pi;
            } else {
                a_sup = std::abs(std::log(l / l0));
                b_sup = std::atan(std::abs(l - l0) / (2.0 * std::sqrt(l * l0)));
            }
            upper_terms_[static_cast<size_t>(j) - 1] = a_sup * a_sup + b_sup * b_sup;
        }
    }
}

int ComplexityEvaluator::locate(double t, Side side) const {
    if (side == Side::Left && t > 0) {
        const auto& bt = schedule_.boundary_times;
        for (size_t k = 1; k < bt.size(); ++k)
            if (t == bt[k])
                return static_cast<int>(k);
    }
    return segment_at(schedule_, t).index;
}

std::pair<double, double> ComplexityEvaluator::b2_d(int j, double t, Side side) const {
    const int i = locate(t, side);
    const ModeSolution::Segment& seg =
        modes_[static_cast<size_t>(j) - 1].segments[static_cast<size_t>(i) - 1];
    const double tau = t - schedule_.segment_start(i);
    return evaluate_b2_d(seg.constants, seg.lambda, tau);
}

double ComplexityEvaluator::lambda_slot(int segment_index, int j) const {
    const ModeSolution& mode = modes_[static_cast<size_t>(j) - 1];
    if (policy_ == LambdaPolicy::FixedInitial || segment_index == 1)
        return mode.lambda0;
    return mode.segments[static_cast<size_t>(segment_index) - 1].lambda;
}

PhasePair ComplexityEvaluator::phase(int j, double t, Side side) const {
    const int i = locate(t, side);
    const ModeSolution::Segment& seg =
        modes_[static_cast<size_t>(j) - 1].segments[static_cast<size_t>(i) - 1];
    const double tau = t - schedule_.segment_start(i);
    const auto [b2, d] = evaluate_b2_d(seg.constants, seg.lambda, tau);
    return phase_from_b2_d(b2, d, modes_[static_cast<size_t>(j) - 1].lambda0,
                           lambda_slot(i, j));
}

ComplexityBreakdown ComplexityEvaluator::at(double t, Side side, bool with_modes) const {
    const int n = n_modes();
    const int i = locate(t, side);
    const double tau = t - schedule_.segment_start(i);

    std::vector<double> terms(static_cast<size_t>(n));
    std::vector<PhasePair> phases;
    if (with_modes)
        phases.resize(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const ModeSolution::Segment& seg =
            modes_[static_cast<size_t>(j) - 1].segments[static_cast<size_t>(i) - 1];
        const auto [b2, d] = evaluate_b2_d(seg.constants, seg.lambda, tau);
        const PhasePair p = phase_from_b2_d(b2, d, modes_[static_cast<size_t>(j) - 1].lambda0,
                                            lambda_slot(i, j));
        terms[static_cast<size_t>(j) - 1] = p.a * p.a + p.b * p.b;
        if (with_modes)
            phases[static_cast<size_t>(j) - 1] = p;
    }
    ComplexityBreakdown r = breakdown_from_terms(terms);
    r.modes = std::move(phases);
    return r;
}

ComplexityBreakdown ComplexityEvaluator::successive(double t0, double t, bool with_modes) const {
    const int i0 = locate(t0, Side::Right);
    // target may sit anywhere in [t0, end of segment i0+1]; the window's
    // right edge is evaluated as a limit from the left
    const auto& bt = schedule_.boundary_times;
    const bool next_exists = i0 < schedule_.n_segments();
    const double window_end = (next_exists && static_cast<size_t>(i0) + 1 < bt.size())
                                  ? bt[static_cast<size_t>(i0) + 1]
                                  : schedule_.end_time();
    if (t < t0)
        throw std::out_of_range("successive_complexity: t must be >= t0");
    if (t > window_end)
        throw std::out_of_range("successive_complexity: t beyond the segment after t0's");

    const int n = n_modes();
    const int it = (t == window_end && std::isfinite(window_end)) ? locate(t, Side::Left)
                                                                  : locate(t, Side::Right);
    const double tau0 = t0 - schedule_.segment_start(i0);
    const double taut = t - schedule_.segment_start(it);

    std::vector<double> terms(static_cast<size_t>(n));
    std::vector<PhasePair> phases;
    if (with_modes)
        phases.resize(static_cast<size_t>(n));
    bool flagged = false;
    for (int j = 1; j <= n; ++j) {
        const ModeSolution& mode = modes_[static_cast<size_t>(j) - 1];
        const ModeSolution::Segment& seg_r = mode.segments[static_cast<size_t>(i0) - 1];
        const ModeSolution::Segment& seg_t = mode.segments[static_cast<size_t>(it) - 1];
        const auto [b2r, dr] = evaluate_b2_d(seg_r.constants, seg_r.lambda, tau0);
        const auto [b2t, dt] = evaluate_b2_d(seg_t.constants, seg_t.lambda, taut);
        const double sr = lambda_slot(i0, j);
        const double st = lambda_slot(it, j);

        // A = ln(|Omega_T| / |Omega_R|), B from the two-term arctan of the
        // relative phase of Omega_T against Omega_R
        PhasePair p;
        p.a = std::log((std::sqrt(st + dt * dt) * b2r) / (std::sqrt(sr + dr * dr) * b2t));
        const double num = dr * std::sqrt(st) - dt * std::sqrt(sr);
        const double den = std::sqrt(sr * st) + dr * dt;
        if (den < 0)
            flagged = true;
        p.b = (num == 0 && den == 0) ? 0.0 : std::atan(num / den);

        terms[static_cast<size_t>(j) - 1] = p.a * p.a + p.b * p.b;
        if (with_modes)
            phases[static_cast<size_t>(j) - 1] = p;
    }
    ComplexityBreakdown r = breakdown_from_terms(terms);
    r.modes = std::move(phases);
    r.atan_denominator_negative = flagged;
    return r;
}

ComplexityBounds ComplexityEvaluator::bounds(double t) const {
    if (schedule_.n_segments() != 1)
        throw std::invalid_argument(
            "complexity_bounds: only defined for single-quench schedules");
    const ComplexityBreakdown c = at(t);
    ComplexityBounds b;
    b.lower = c.zero_mode;
    const double rest_sq =
        upper_terms_.empty() ? 0.0 : pairwise_sum(upper_terms_.data(), upper_terms_.size());
    b.upper = std::sqrt(c.zero_mode * c.zero_mode + 0.25 * rest_sq);
    return b;
}

double ComplexityEvaluator::offset_a0(int segment_index) const {
    if (segment_index < 1 || segment_index > schedule_.n_segments())
        throw std::invalid_argument("multi_quench_offset: segment index out of range");
    const int n = n_modes();
    std::vector<double> terms(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const ModeSolution::Segment& seg =
            modes_[static_cast<size_t>(j) - 1].segments[static_cast<size_t>(segment_index) - 1];
        const PhasePair p =
            phase_from_b2_d(seg.constants.b2_0, seg.constants.bdb_0,
                            modes_[static_cast<size_t>(j) - 1].lambda0,
                            lambda_slot(segment_index, j));
        terms[static_cast<size_t>(j) - 1] = p.a * p.a + p.b * p.b;
    }
    return 0.25 * pairwise_sum(terms.data(), terms.size());
}

ComplexityBreakdown total_complexity(const QuenchSchedule& schedule, double t,
                                     LambdaPolicy policy) {
    return ComplexityEvaluator(schedule, policy).at(t);
}

ComplexityBounds complexity_bounds(const QuenchSchedule& schedule, double t, LambdaPolicy policy) {
    return ComplexityEvaluator(schedule, policy).bounds(t);
}

ComplexityBreakdown successive_complexity(const QuenchSchedule& schedule, double t0, double t,
                                          LambdaPolicy policy) {
    return ComplexityEvaluator(schedule, policy).successive(t0, t);
}

double multi_quench_offset(const QuenchSchedule& schedule, int segment_index,
                           LambdaPolicy policy) {
    return ComplexityEvaluator(schedule, policy).offset_a0(segment_index);
}

double critical_zero_mode_closed_form(double omega_i, double t) {
    if (!(omega_i > 0))
        throw std::invalid_argument("critical_zero_mode_closed_form: omega_i must be > 0");
    if (t < 0)
        throw std::invalid_argument("critical_zero_mode_closed_form: t must be >= 0");
    const double wt = omega_i * t;
    const double lg = std::log1p(wt * wt);
    const double at = std::atan(wt);
    return std::sqrt(lg * lg / 16.0 + at * at / 4.0);
}

EarlyTimeCoefficients early_time_coefficients(const ChainSpec& spec,
                                              const QuenchSegment& first_segment) {
    const int n = spec.n_oscillators;
    const ModeSpectrum pre = mode_eigenvalues(spec.omega0, spec.coupling0, n);
    const ModeSpectrum post = mode_eigenvalues(first_segment.omega, first_segment.coupling, n);
    EarlyTimeCoefficients c;
    for (int j = 1; j <= n; ++j) {
        const double l0 = pre.lambda(j);
        if (!(l0 > 0))
            throw std::invalid_argument("early_time_coefficients: lambda_j(0) must be > 0");
        const double l = post.lambda(j);
        const double d = l - l0;
        c.a2 += d * d / l0;
        c.a4 += d * d * (5.0 * l * l - 6.0 * l * l0 + 5.0 * l0 * l0) / (l0 * l0);
    }
    c.a2 *= 0.25;
    c.a4 /= 48.0;
    return c;
}

ComplexityBreakdown breakdown_from_states(const std::vector<AuxiliaryState>& states,
                                          const std::vector<double>& lambda0,
                                          const std::vector<double>& slots) {
    const size_t n = states.size();
    if (lambda0.size() != n || slots.size() != n)
        throw std::invalid_argument("breakdown_from_states: mismatched lengths");
    std::vector<double> terms(n);
    for (size_t j = 0; j < n; ++j) {
        const double b2 = states[j].b * states[j].b;
        const double d = states[j].b * states[j].b_dot;
        const PhasePair p = phase_from_b2_d(b2, d, lambda0[j], slots[j]);
        terms[j] = p.a * p.a + p.b * p.b;
    }
    return breakdown_from_terms(terms);
}

ComplexityBreakdown successive_from_states(const std::vector<AuxiliaryState>& reference,
                                           const std::vector<AuxiliaryState>& target,
                                           const std::vector<double>& slots_reference,
                                           const std::vector<double>& slots_target) {
    const size_t n = reference.size();
    if (target.size() != n || slots_reference.size() != n || slots_target.size() != n)
        throw std::invalid_argument("successive_from_states: mismatched lengths");
    std::vector<double> terms(n);
    bool flagged = false;
    for (size_t j = 0; j < n; ++j) {
        const double b2r = reference[j].b * reference[j].b;
        const double dr = reference[j].b * reference[j].b_dot;
        const double b2t = target[j].b * target[j].b;
        const double dt = target[j].b * target[j].b_dot;
        const double sr = slots_reference[j];
        const double st = slots_target[j];
        PhasePair p;
        p.a = std::log((std::sqrt(st + dt * dt) * b2r) / (std::sqrt(sr + dr * dr) * b2t));
        const double num = dr * std::sqrt(st) - dt * std::sqrt(sr);
        const double den = std::sqrt(sr * st) + dr * dt;
        if (den < 0)
            flagged = true;
        p.b = (num == 0 && den == 0) ? 0.0 : std::atan(num / den);
        terms[j] = p.a * p.a + p.b * p.b;
    }
    ComplexityBreakdown r = breakdown_from_terms(terms);
    r.atan_denominator_negative = flagged;
    return r;
}

PhasePair perturbative_delta_response(double lambda0, double omega_i, double delta, double t) {
    if (!(lambda0 > 0))
        throw std::invalid_argument("perturbative_delta_response: lambda0 must be > 0");
    const double root = std::sqrt(lambda0);
    const double s = std::sin(root * t);
    PhasePair p;
    p.a = 2.0 * omega_i * s * s * delta / lambda0;
    p.b = -omega_i * std::sin(2.0 * root * t) * delta / lambda0;
    return p;
}

}
