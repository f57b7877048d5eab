#include "qcc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qcc {

namespace {

QuenchSchedule single_quench(int n, double wi, double ki, double wf, double kf) {
    return QuenchSchedule::make(ChainSpec{n, wi, ki}, {QuenchSegment{wf, kf, {}}});
}

// n_quenches alternating frequency segments of length period each, the last
// one open-ended; final_omega overrides the last segment's frequency.
QuenchSchedule alternating(int n, double wi, double k, double wf, double period, int n_quenches,
                           std::optional<double> final_omega = {}) {
    std::vector<QuenchSegment> segments;
    for (int i = 0; i < n_quenches; ++i) {
        double w = (i % 2 == 0) ? wf : wi;
        if (i + 1 == n_quenches && final_omega)
            w = *final_omega;
        std::optional<double> dur;
        if (i + 1 != n_quenches)
            dur = period;
        segments.push_back(QuenchSegment{w, k, dur});
    }
    return QuenchSchedule::make(ChainSpec{n, wi, k}, std::move(segments));
}

Scenario make_scenario(QuenchSchedule schedule, GridSpec grid, std::string label,
                       std::string notes) {
    Scenario s;
    s.schedule = std::move(schedule);
    s.grid = grid;
    s.label = std::move(label);
    s.notes = std::move(notes);
    return s;
}

void check_variant(int variant, int count, const std::string& id) {
    if (variant < 1 || variant > count)
        throw std::invalid_argument("figure_preset: " + id + " has " + std::to_string(count) +
                                    " variant(s)");
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {"fig1", "fig2", "fig3", "fig4",  "fig5", "fig6",
                                                 "fig7", "fig8", "fig9", "fig10", "fig11"};
    return ids;
}

int figure_variant_count(const std::string& id) {
    if (id == "fig1")
        return 3;
    if (id == "fig2" || id == "fig3" || id == "fig4")
        return 4;
    if (id == "fig9" || id == "fig10")
        return 2;
    if (id == "fig11")
        return 2;
    if (id == "fig5" || id == "fig6" || id == "fig7" || id == "fig8")
        return 1;
    throw std::invalid_argument("unknown figure id '" + id + "'");
}

Scenario figure_preset(const std::string& id, int variant) {
    check_variant(variant, figure_variant_count(id), id);
    const std::string vlabel = id + ".v" + std::to_string(variant);
    const char* range_note = "display range chosen to cover several revivals";

    if (id == "fig1") {
        const double wf[] = {0.3, 0.1, 0.01};
        Scenario s = make_scenario(single_quench(4, 3.0, 2.0, wf[variant - 1], 2.5),
                                   {0.0, 700.0, 2001}, vlabel, range_note);
        s.emit_bounds = true;
        return s;
    }
    if (id == "fig2") {
        const double wf[] = {0.009, 0.004, 0.002, 0.001};
        Scenario s = make_scenario(single_quench(100, 0.3, 10.0, wf[variant - 1], 10.0),
                                   {0.0, 800.0, 2001}, vlabel, range_note);
        s.emit_bounds = true;
        return s;
    }
    if (id == "fig3" || id == "fig4") {
        // fig4 is the same run viewed through the zero-mode-subtracted column
        const double wi[] = {0.05, 0.07, 0.1, 0.2};
        Scenario s = make_scenario(single_quench(100, wi[variant - 1], 1.0, 0.0, 1.0),
                                   {0.0, 500.0, 2001}, vlabel,
                                   "critical quench; range long enough to expose the slow growth");
        s.emit_bounds = true;
        return s;
    }
    if (id == "fig5")
        return make_scenario(alternating(100, 3.0, 4.0, 5.0, 4.0, 5), {0.0, 24.0, 2001}, vlabel,
                             "five quenches of period 4 plus one open segment");
    if (id == "fig6")
        return make_scenario(alternating(100, 3.0, 4.0, 5.0, 4.0, 5, 15.0), {0.0, 24.0, 2001},
                             vlabel, "as fig5 with the fifth quench raised to omega = 15");
    if (id == "fig7")
        return make_scenario(alternating(100, 0.3, 4.0, 0.085, 55.0, 3, 0.0), {0.0, 220.0, 2001},
                             vlabel, "critical final quench at t = 110; boundaries lie on the grid");
    if (id == "fig8")
        return make_scenario(alternating(100, 0.3, 4.0, 0.085, 55.0, 5, 0.0), {0.0, 330.0, 3001},
                             vlabel, "critical final quench at t = 220; boundaries lie on the grid");

    if (id == "fig9" || id == "fig10") {
        const double wi[] = {0.3, 3.0};
        const int n_segments = (id == "fig9") ? 2 : 3;
        const double t0 = (id == "fig9") ? 1.0 : 5.0;
        Scenario s = make_scenario(alternating(100, wi[variant - 1], 4.0, 5.0, 4.0, n_segments),
                                   {t0, t0 + 7.0, 1751}, vlabel,
                                   "window spans the reference segment and the one after it");
        s.successive = SuccessiveSpec{t0};
        return s;
    }
    if (id == "fig11") {
        // variant 1: reference taken at the first quench instant; variant 2:
        // at the third. Shifting variant 2 by -2T aligns the two windows
        // sample by sample.
        const double t0 = (variant == 1) ? 0.0 : 8.0;
        Scenario s = make_scenario(alternating(100, 0.3, 4.0, 5.0, 4.0, 5),
                                   {t0, t0 + 8.0, 2001}, vlabel,
                                   "compare with the other variant shifted by two periods");
        s.successive = SuccessiveSpec{t0};
        return s;
    }
    throw std::invalid_argument("unknown figure id '" + id + "'");
}

std::vector<double> grid_times(const GridSpec& grid) {
    if (grid.samples < 2)
        throw std::invalid_argument("grid: at least 2 samples required");
    if (!(grid.start < grid.end))
        throw std::invalid_argument("grid: start must be < end");
    std::vector<double> t(static_cast<size_t>(grid.samples));
    const double span = grid.end - grid.start;
    for (int k = 0; k < grid.samples; ++k)
        t[static_cast<size_t>(k)] =
            grid.start + span * static_cast<double>(k) / static_cast<double>(grid.samples - 1);
    t.back() = grid.end;
    return t;
}

std::vector<CurveSample> sample_curve(const Scenario& scenario) {
    const ComplexityEvaluator eval(scenario.schedule, scenario.policy);
    const std::vector<double> times = grid_times(scenario.grid);
    const bool with_bounds = scenario.emit_bounds && scenario.schedule.n_segments() == 1 &&
                             !scenario.successive.has_value();

    std::vector<CurveSample> curve(times.size());
    for (size_t k = 0; k < times.size(); ++k) {
        const double t = times[k];
        const ComplexityBreakdown c =
            scenario.successive ? eval.successive(scenario.successive->t0, t, scenario.emit_per_mode)
                                : eval.at(t, Side::Right, scenario.emit_per_mode);
        CurveSample& s = curve[k];
        s.t = t;
        s.c_total = c.total;
        s.c_zero = c.zero_mode;
        s.c_rest = c.rest;
        if (with_bounds) {
            const ComplexityBounds b = eval.bounds(t);
            s.c_lower = b.lower;
            s.c_upper = b.upper;
        }
        if (scenario.emit_per_mode) {
            s.mode_a.reserve(c.modes.size());
            s.mode_b.reserve(c.modes.size());
            for (const PhasePair& p : c.modes) {
                s.mode_a.push_back(p.a);
                s.mode_b.push_back(p.b);
            }
        }
    }
    return curve;
}

std::vector<double> numeric_derivative(const std::vector<double>& t, const std::vector<double>& v) {
    const size_t n = t.size();
    if (n != v.size())
        throw std::invalid_argument("numeric_derivative: mismatched lengths");
    if (n < 3)
        throw std::invalid_argument("numeric_derivative: at least 3 samples required");
    const double h = t[1] - t[0];
    for (size_t i = 1; i + 1 < n; ++i)
        if (std::abs((t[i + 1] - t[i]) - h) > 1e-9 * (1.0 + std::abs(t[i])))
            throw std::invalid_argument("numeric_derivative: grid is not uniform");

    std::vector<double> d(n);
    d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    for (size_t i = 1; i + 1 < n; ++i)
        d[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
    d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
    return d;
}

std::vector<double> numeric_derivative(const std::vector<CurveSample>& curve, CurveColumn column) {
    std::vector<double> t(curve.size()), v(curve.size());
    for (size_t i = 0; i < curve.size(); ++i) {
        t[i] = curve[i].t;
        v[i] = column == CurveColumn::Total ? curve[i].c_total
               : column == CurveColumn::Zero ? curve[i].c_zero
                                             : curve[i].c_rest;
    }
    return numeric_derivative(t, v);
}

double extract_revival_period(const std::vector<CurveSample>& curve, bool zero_mode_hint) {
    if (curve.size() < 5)
        throw std::invalid_argument("extract_revival_period: curve too short");
    std::vector<double> v(curve.size());
    for (size_t i = 0; i < curve.size(); ++i)
        v[i] = zero_mode_hint ? curve[i].c_zero : curve[i].c_total;

    const auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
    const double depth_cut = *lo_it + 0.2 * (*hi_it - *lo_it);

    std::vector<double> minima;
    for (size_t i = 1; i + 1 < v.size(); ++i)
        if (v[i] < v[i - 1] && v[i] <= v[i + 1] && v[i] <= depth_cut)
            minima.push_back(curve[i].t);
    if (minima.size() < 2)
        throw std::runtime_error("extract_revival_period: no detectable minima");

    std::vector<double> gaps;
    for (size_t i = 1; i < minima.size(); ++i)
        gaps.push_back(minima[i] - minima[i - 1]);
    // drop intra-cluster gaps (several grid minima inside one broad dip)
    const double md = median(gaps);
    double sum = 0.0;
    long count = 0;
    for (double g : gaps)
        if (g >= 0.5 * md) {
            sum += g;
            ++count;
        }
    if (count == 0)
        throw std::runtime_error("extract_revival_period: no detectable minima");
    return sum / static_cast<double>(count);
}

std::vector<double> detect_crossover(const std::vector<CurveSample>& a,
                                     const std::vector<CurveSample>& b, double window_lo,
                                     double window_hi, double shift_b) {
    std::vector<size_t> ia, ib;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].t >= window_lo && a[i].t <= window_hi)
            ia.push_back(i);
    for (size_t i = 0; i < b.size(); ++i) {
        const double tb = b[i].t + shift_b;
        if (tb >= window_lo && tb <= window_hi)
            ib.push_back(i);
    }
    if (ia.size() != ib.size() || ia.empty())
        throw std::invalid_argument("detect_crossover: curves do not share the window grid");
    for (size_t k = 0; k < ia.size(); ++k)
        if (std::abs(a[ia[k]].t - (b[ib[k]].t + shift_b)) > 1e-9 * (1.0 + std::abs(a[ia[k]].t)))
            throw std::invalid_argument("detect_crossover: curves do not share the window grid");

    // sign changes only; exact zeros extend the previous run, so identical
    // curves yield no crossings and a tangent touch is not counted
    std::vector<double> crossings;
    int prev_sign = 0;
    size_t prev_k = 0;
    double prev_d = 0.0;
    for (size_t k = 0; k < ia.size(); ++k) {
        const double d = a[ia[k]].c_total - b[ib[k]].c_total;
        const int sign = d > 0 ? 1 : d < 0 ? -1 : 0;
        if (sign == 0)
            continue;
        if (prev_sign != 0 && sign != prev_sign) {
            if (k == prev_k + 1) {
                const double t0 = a[ia[prev_k]].t, t1 = a[ia[k]].t;
                crossings.push_back(t0 + (t1 - t0) * prev_d / (prev_d - d));
            } else {
                // the signs are separated by a run of exact zeros
                crossings.push_back(0.5 * (a[ia[prev_k + 1]].t + a[ia[k - 1]].t));
            }
        }
        prev_sign = sign;
        prev_k = k;
        prev_d = d;
    }
    return crossings;
}

BoundsSweepReport verify_bounds_sweep(const Scenario& scenario) {
    if (scenario.schedule.n_segments() != 1 || scenario.successive)
        throw std::invalid_argument("verify_bounds_sweep: single-quench scenario required");
    Scenario with_bounds = scenario;
    with_bounds.emit_bounds = true;
    const std::vector<CurveSample> curve = sample_curve(with_bounds);

    BoundsSweepReport report;
    report.max_margin = -std::numeric_limits<double>::infinity();
    for (const CurveSample& s : curve) {
        const double margin = std::max(*s.c_lower - s.c_total, s.c_total - *s.c_upper);
        report.max_margin = std::max(report.max_margin, margin);
        if (margin > 1e-12 * (1.0 + std::abs(s.c_total)))
            ++report.violations;
    }
    return report;
}

}
