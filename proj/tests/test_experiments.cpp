#include "qcc/experiments.hpp"

#include <doctest.h>

#include <cmath>

using namespace qcc;

namespace {

constexpr double pi = 3.1415926535897932384626433832795;

std::vector<CurveSample> synthetic_curve(double t0, double t1, int n,
                                         double (*f)(double)) {
    std::vector<CurveSample> curve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double t = t0 + (t1 - t0) * k / (n - 1);
        curve[static_cast<size_t>(k)].t = t;
        curve[static_cast<size_t>(k)].c_total = f(t);
        curve[static_cast<size_t>(k)].c_zero = f(t);
    }
    return curve;
}

}

TEST_CASE("figure presets carry the published parameters") {
    const Scenario fig5 = figure_preset("fig5");
    CHECK(fig5.schedule.spec.n_oscillators == 100);
    CHECK(fig5.schedule.spec.omega0 == 3.0);
    CHECK(fig5.schedule.spec.coupling0 == 4.0);
    REQUIRE(fig5.schedule.n_segments() == 5);
    CHECK(fig5.schedule.segments[0].omega == 5.0);
    CHECK(fig5.schedule.segments[1].omega == 3.0);
    CHECK(*fig5.schedule.segments[0].duration == 4.0);
    CHECK(!fig5.schedule.segments[4].duration.has_value());

    const Scenario fig1v3 = figure_preset("fig1", 3);
    CHECK(fig1v3.schedule.spec.n_oscillators == 4);
    CHECK(fig1v3.schedule.spec.omega0 == 3.0);
    CHECK(fig1v3.schedule.spec.coupling0 == 2.0);
    CHECK(fig1v3.schedule.segments[0].omega == 0.01);
    CHECK(fig1v3.schedule.segments[0].coupling == 2.5);

    const Scenario fig3v1 = figure_preset("fig3", 1);
    CHECK(fig3v1.schedule.spec.omega0 == 0.05);
    CHECK(fig3v1.schedule.spec.coupling0 == 1.0);
    CHECK(fig3v1.schedule.segments[0].omega == 0.0);

    CHECK(figure_variant_count("fig2") == 4);
    CHECK_THROWS_AS(figure_preset("fig12"), std::invalid_argument);
    CHECK_THROWS_AS(figure_preset("fig1", 4), std::invalid_argument);
}

TEST_CASE("sampling an identity quench gives a zero curve") {
    Scenario s;
    s.schedule = QuenchSchedule::make(ChainSpec{8, 1.1, 0.4}, {QuenchSegment{1.1, 0.4, {}}});
    s.grid = {0.0, 10.0, 101};
    for (const CurveSample& c : sample_curve(s)) {
        CHECK(c.c_total <= 1e-12);
        CHECK(c.c_zero <= 1e-12);
        CHECK(c.c_rest <= 1e-12);
    }
}

TEST_CASE("curve samples decompose and carry bounds") {
    Scenario s = figure_preset("fig2", 2);
    s.grid = {0.0, 120.0, 241};
    s.emit_bounds = true;
    const std::vector<CurveSample> curve = sample_curve(s);
    REQUIRE(curve.size() == 241);
    CHECK(curve.front().t == 0.0);
    CHECK(curve.back().t == 120.0);
    for (const CurveSample& c : curve) {
        CHECK(c.c_total * c.c_total ==
              doctest::Approx(c.c_zero * c.c_zero + c.c_rest * c.c_rest).epsilon(1e-12));
        REQUIRE(c.c_lower.has_value());
        REQUIRE(c.c_upper.has_value());
        CHECK(*c.c_lower <= c.c_total + 1e-12);
        CHECK(c.c_total <= *c.c_upper + 1e-12);
    }
}

TEST_CASE("fig3 zero-mode column equals the closed form") {
    Scenario s = figure_preset("fig3", 4);
    s.grid = {0.0, 500.0, 501};
    const double wi = s.schedule.spec.omega0;
    for (const CurveSample& c : sample_curve(s))
        CHECK(std::abs(c.c_zero - critical_zero_mode_closed_form(wi, c.t)) < 1e-10);
}

TEST_CASE("numeric derivative of simple curves") {
    const auto constant = synthetic_curve(0.0, 1.0, 11, [](double) { return 3.7; });
    for (double d : numeric_derivative(constant))
        CHECK(std::abs(d) < 1e-12);

    const auto linear = synthetic_curve(0.0, 1.0, 11, [](double t) { return 2.0 * t; });
    for (double d : numeric_derivative(linear))
        CHECK(d == doctest::Approx(2.0).epsilon(1e-10));

    const auto two = synthetic_curve(0.0, 1.0, 2, [](double t) { return t; });
    CHECK_THROWS_AS(numeric_derivative(two), std::invalid_argument);
}

TEST_CASE("derivative of the complexity kinks at a critical quench") {
    // fig7 layout on its preset grid; the boundary t = 110 lies on the grid
    const Scenario s = figure_preset("fig7");
    const std::vector<CurveSample> curve = sample_curve(s);
    const std::vector<double> d = numeric_derivative(curve);
    REQUIRE(d.size() == curve.size());
    size_t kc = 0;
    for (size_t k = 0; k < curve.size(); ++k)
        if (curve[k].t == 110.0)
            kc = k;
    REQUIRE(kc > 0);
    // one-sided secants from clean samples on either side of the kink
    const double h = curve[1].t - curve[0].t;
    const double left = (curve[kc].c_total - curve[kc - 1].c_total) / h;
    const double right = (curve[kc + 1].c_total - curve[kc].c_total) / h;
    CHECK(std::abs(right - left) > 0.01);
    // the sampled derivative swings across the kink as well
    CHECK(std::abs(d[kc + 1] - d[kc - 1]) > 0.01);
}

TEST_CASE("revival period extraction") {
    // |sin| has minima every pi
    const auto humps = synthetic_curve(0.0, 10.0 * pi, 2001,
                                       [](double t) { return std::abs(std::sin(t)); });
    CHECK(extract_revival_period(humps, false) == doctest::Approx(pi).epsilon(1e-3));

    const auto flat = synthetic_curve(0.0, 1.0, 101, [](double) { return 1.0; });
    CHECK_THROWS(extract_revival_period(flat, false));
    const auto ramp = synthetic_curve(0.0, 1.0, 101, [](double t) { return 2.0 * t; });
    CHECK_THROWS(extract_revival_period(ramp, false));
}

TEST_CASE("fig1 revival periods follow pi/omega_f") {
    const double p2 = extract_revival_period(sample_curve(figure_preset("fig1", 2)), true);
    CHECK(p2 == doctest::Approx(pi / 0.1).epsilon(0.05));
    const double p3 = extract_revival_period(sample_curve(figure_preset("fig1", 3)), true);
    CHECK(p3 == doctest::Approx(pi / 0.01).epsilon(0.05));
    CHECK(p3 / p2 == doctest::Approx(10.0).epsilon(0.05));
}

TEST_CASE("crossover detection on synthetic curves") {
    const auto a = synthetic_curve(0.0, 1.0, 101, [](double t) { return t; });
    const auto b = synthetic_curve(0.0, 1.0, 101, [](double t) { return 1.0 - t; });
    CHECK(detect_crossover(a, a, 0.0, 1.0).empty());
    const std::vector<double> x = detect_crossover(a, b, 0.0, 1.0);
    REQUIRE(x.size() == 1);
    CHECK(x[0] == doctest::Approx(0.5).epsilon(1e-12));

    const auto coarse = synthetic_curve(0.0, 1.0, 51, [](double t) { return t; });
    CHECK_THROWS_AS(detect_crossover(a, coarse, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("fig11 crossover: reversed ordering around the later quench") {
    const std::vector<CurveSample> a = sample_curve(figure_preset("fig11", 1));
    const std::vector<CurveSample> b = sample_curve(figure_preset("fig11", 2));
    const std::vector<double> crossings = detect_crossover(a, b, 0.0, 8.0, -8.0);
    long late = 0;
    for (double t : crossings)
        if (t > 4.0)
            ++late;
    CHECK(late >= 1);
    size_t pre = 0;
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k].t < 4.0)
            pre = k;
    CHECK(a[pre].c_total < b[pre].c_total);
    CHECK(a.back().c_total > b.back().c_total);
}

TEST_CASE("bounds sweeps on single-quench presets") {
    for (int v = 1; v <= 4; ++v) {
        const BoundsSweepReport r = verify_bounds_sweep(figure_preset("fig2", v));
        CHECK(r.violations == 0);
        CHECK(r.max_margin <= 0.0);
    }
    Scenario identity;
    identity.schedule =
        QuenchSchedule::make(ChainSpec{5, 1.0, 1.0}, {QuenchSegment{1.0, 1.0, {}}});
    identity.grid = {0.0, 20.0, 201};
    const BoundsSweepReport r = verify_bounds_sweep(identity);
    CHECK(r.violations == 0);

    CHECK_THROWS_AS(verify_bounds_sweep(figure_preset("fig5")), std::invalid_argument);
}

TEST_CASE("fig5 residual complexity floor") {
    const Scenario s = figure_preset("fig5");
    const ComplexityEvaluator eval(s.schedule, LambdaPolicy::FixedInitial);
    const double a20 = eval.offset_a0(2);
    CHECK(a20 > 0.0);
    double min_c = 1e300;
    for (const CurveSample& c : sample_curve(s))
        if (c.t >= 8.0 && c.t < 12.0)
            min_c = std::min(min_c, c.c_total);
    CHECK(min_c > 0.0);
    // offset consistency at the segment start
    const double c8 = eval.at(8.0).total;
    CHECK(c8 * c8 == doctest::Approx(eval.offset_a0(3)).epsilon(1e-9));
}

TEST_CASE("fig6: the floor survives a larger final frequency") {
    double floor5 = 1e300, floor6 = 1e300;
    for (const CurveSample& c : sample_curve(figure_preset("fig5")))
        if (c.t >= 16.0)
            floor5 = std::min(floor5, c.c_total);
    for (const CurveSample& c : sample_curve(figure_preset("fig6")))
        if (c.t >= 16.0)
            floor6 = std::min(floor6, c.c_total);
    CHECK(floor6 > 0.0);
    CHECK(floor6 >= 0.5 * floor5);
}

TEST_CASE("fig9/fig10: successive complexity never undercuts its pre-quench window") {
    for (const char* id : {"fig9", "fig10"}) {
        for (int v = 1; v <= 2; ++v) {
            const Scenario s = figure_preset(id, v);
            const double quench =
                s.schedule.boundary_times[static_cast<size_t>(
                    segment_at(s.schedule, s.successive->t0).index)];
            double pre = 1e300, post = 1e300;
            for (const CurveSample& c : sample_curve(s)) {
                if (c.t <= quench)
                    pre = std::min(pre, c.c_total);
                else
                    post = std::min(post, c.c_total);
            }
            CHECK(post >= pre - 1e-12);
        }
    }
}

TEST_CASE("sampling is deterministic") {
    const Scenario s = figure_preset("fig5");
    const std::vector<CurveSample> once = sample_curve(s);
    const std::vector<CurveSample> twice = sample_curve(s);
    REQUIRE(once.size() == twice.size());
    for (size_t k = 0; k < once.size(); ++k) {
        CHECK(once[k].t == twice[k].t);
        CHECK(once[k].c_total == twice[k].c_total);
        CHECK(once[k].c_zero == twice[k].c_zero);
        CHECK(once[k].c_rest == twice[k].c_rest);
    }
}
