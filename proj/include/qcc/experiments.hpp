#pragma once

#include "qcc/complexity.hpp"

#include <string>

namespace qcc {

struct GridSpec {
    double start = 0.0;
    double end = 1.0;
    int samples = 2;
};

// Successive-quench mode: complexity measured against the state at t0
// instead of the state at t = 0.
struct SuccessiveSpec {
    double t0 = 0.0;
};

struct Scenario {
    QuenchSchedule schedule;
    GridSpec grid;
    LambdaPolicy policy = LambdaPolicy::FixedInitial;
    bool emit_per_mode = false;
    bool emit_bounds = false;
    std::optional<SuccessiveSpec> successive;
    std::string label;
    std::string notes;   // e.g. how the displayed range was chosen
};

struct CurveSample {
    double t = 0.0;
    double c_total = 0.0;
    double c_zero = 0.0;
    double c_rest = 0.0;
    std::optional<double> c_lower;
    std::optional<double> c_upper;
    std::vector<double> mode_a;
    std::vector<double> mode_b;
};

// Built-in scenario presets fig1..fig11 (several carry variants, e.g. the
// four target frequencies of fig2). Variants are 1-based.
Scenario figure_preset(const std::string& id, int variant = 1);
int figure_variant_count(const std::string& id);
const std::vector<std::string>& figure_ids();

std::vector<double> grid_times(const GridSpec& grid);

std::vector<CurveSample> sample_curve(const Scenario& scenario);

enum class CurveColumn {
    Total,
    Zero,
    Rest,
};

// Central differences inside, second-order one-sided stencils at the ends.
// Requires >= 3 samples on a uniform grid.
std::vector<double> numeric_derivative(const std::vector<double>& t, const std::vector<double>& v);
std::vector<double> numeric_derivative(const std::vector<CurveSample>& curve,
                                       CurveColumn column = CurveColumn::Total);

// Dominant revival period from the spacing of deep local minima. With the
// zero-mode hint the (smooth, single-frequency) zero-mode column is used.
double extract_revival_period(const std::vector<CurveSample>& curve, bool zero_mode_hint);

// Sign changes of (a - b) inside [window_lo, window_hi], located by linear
// interpolation. b's time axis is shifted by shift_b before comparison; the
// shifted grids must coincide.
std::vector<double> detect_crossover(const std::vector<CurveSample>& a,
                                     const std::vector<CurveSample>& b, double window_lo,
                                     double window_hi, double shift_b = 0.0);

struct BoundsSweepReport {
    long violations = 0;
    // max over samples of max(lower - c, c - upper); negative when the
    // sandwich holds everywhere
    double max_margin = 0.0;
};

BoundsSweepReport verify_bounds_sweep(const Scenario& scenario);

}
