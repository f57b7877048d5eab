#include "qcc/config.hpp"
#include "qcc/emit.hpp"
#include "qcc/validation.hpp"

#include <doctest.h>

#include <sstream>

using namespace qcc;

namespace {

const char* fig1v1_doc = R"({
  "chain": {"n": 4, "omega0": 3.0, "k0": 2.0},
  "segments": [{"omega": 0.3, "k": 2.5}],
  "grid": {"start": 0.0, "end": 700.0, "samples": 2001},
  "outputs": {"bounds": true}
})";

}

TEST_CASE("minimal single-quench config equals the fig1 preset") {
    const RunConfig config = parse_config(fig1v1_doc);
    const Scenario parsed = config.scenario;
    const Scenario preset = figure_preset("fig1", 1);

    CHECK(parsed.schedule.spec.n_oscillators == preset.schedule.spec.n_oscillators);
    CHECK(parsed.schedule.spec.omega0 == preset.schedule.spec.omega0);
    CHECK(parsed.schedule.spec.coupling0 == preset.schedule.spec.coupling0);
    REQUIRE(parsed.schedule.n_segments() == preset.schedule.n_segments());
    CHECK(parsed.schedule.segments[0].omega == preset.schedule.segments[0].omega);
    CHECK(parsed.schedule.segments[0].coupling == preset.schedule.segments[0].coupling);
    CHECK(!parsed.schedule.segments[0].duration.has_value());
    CHECK(parsed.grid.start == preset.grid.start);
    CHECK(parsed.grid.end == preset.grid.end);
    CHECK(parsed.grid.samples == preset.grid.samples);
    CHECK(parsed.policy == LambdaPolicy::FixedInitial);   // default applied
    CHECK(parsed.emit_bounds == preset.emit_bounds);
}

TEST_CASE("config diagnostics name the offending key") {
    const char* bad_duration = R"({
      "chain": {"n": 4, "omega0": 3.0, "k0": 2.0},
      "segments": [{"omega": 0.3, "k": 2.5, "duration": -1.0}, {"omega": 3.0, "k": 2.0}],
      "grid": {"start": 0.0, "end": 10.0, "samples": 11}
    })";
    try {
        parse_config(bad_duration);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("segments[0].duration") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_config("{}"), ConfigError);
    CHECK_THROWS_AS(parse_config("not json"), ConfigError);

    const char* missing_samples = R"({
      "chain": {"n": 4, "omega0": 3.0, "k0": 2.0},
      "segments": [{"omega": 0.3, "k": 2.5}],
      "grid": {"start": 0.0, "end": 10.0}
    })";
    try {
        parse_config(missing_samples);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("grid.samples") != std::string::npos);
    }

    const char* negative_n = R"({
      "chain": {"n": -2, "omega0": 3.0, "k0": 2.0},
      "segments": [{"omega": 0.3, "k": 2.5}],
      "grid": {"start": 0.0, "end": 10.0, "samples": 11}
    })";
    try {
        parse_config(negative_n);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("chain.n") != std::string::npos);
    }
}

TEST_CASE("config round-trips through emit_config") {
    RunConfig config = parse_config(fig1v1_doc);
    config.scenario.label = "round-trip";
    config.out_path = "out.csv";
    config.format = OutputFormat::Csv;
    const RunConfig again = parse_config(emit_config(config));
    CHECK(emit_config(again) == emit_config(config));
}

TEST_CASE("csv emission layout") {
    std::vector<CurveSample> curve(2);
    curve[0].t = 0.0;
    curve[1].t = 1.0;
    const std::string csv = emit_curve_csv(curve);
    CHECK(csv == "t,c_total,c_zero,c_rest\n0,0,0,0\n1,0,0,0\n");

    // bounds columns appear between c_rest and the per-mode columns
    std::vector<CurveSample> with_extras(1);
    with_extras[0].t = 0.5;
    with_extras[0].c_lower = 0.0;
    with_extras[0].c_upper = 1.0;
    with_extras[0].mode_a = {0.25, 0.5};
    with_extras[0].mode_b = {-0.25, -0.5};
    const std::string full = emit_curve_csv(with_extras);
    CHECK(full.substr(0, full.find('\n')) ==
          "t,c_total,c_zero,c_rest,c_lower,c_upper,a_1,a_2,b_1,b_2");

    CHECK_THROWS_AS(emit_curve_csv({}), std::invalid_argument);
}

TEST_CASE("csv values carry 17 significant digits and round-trip") {
    std::vector<CurveSample> curve(1);
    curve[0].t = 1.0 / 3.0;
    curve[0].c_total = 0.1234567890123456789;
    const std::string csv = emit_curve_csv(curve);
    std::istringstream rows(csv);
    std::string header, row;
    std::getline(rows, header);
    std::getline(rows, row);
    const size_t comma = row.find(',');
    CHECK(std::stod(row.substr(0, comma)) == 1.0 / 3.0);
    CHECK(std::stod(row.substr(comma + 1, row.find(',', comma + 1) - comma - 1)) ==
          curve[0].c_total);
}

TEST_CASE("per-mode emission lays out the phase columns") {
    Scenario s;
    s.schedule = QuenchSchedule::make(ChainSpec{3, 2.0, 1.0}, {QuenchSegment{3.0, 1.0, {}}});
    s.grid = {0.0, 2.0, 5};
    s.emit_per_mode = true;
    const std::vector<CurveSample> curve = sample_curve(s);
    const std::string csv = emit_curve_csv(curve);
    CHECK(csv.substr(0, csv.find('\n')) == "t,c_total,c_zero,c_rest,a_1,a_2,a_3,b_1,b_2,b_3");

    // per-mode columns reproduce the total
    for (const CurveSample& c : curve) {
        REQUIRE(c.mode_a.size() == 3);
        double sum = 0.0;
        for (size_t j = 0; j < 3; ++j)
            sum += c.mode_a[j] * c.mode_a[j] + c.mode_b[j] * c.mode_b[j];
        CHECK(c.c_total == doctest::Approx(0.5 * std::sqrt(sum)).epsilon(1e-12));
    }

    const std::string json = emit_curve_json(curve, s);
    CHECK(json.find("\"a_3\"") != std::string::npos);
    CHECK(json.find("\"b_1\"") != std::string::npos);
}

TEST_CASE("emission is deterministic") {
    Scenario s = figure_preset("fig5");
    s.grid = {0.0, 24.0, 301};
    const std::vector<CurveSample> curve = sample_curve(s);
    CHECK(emit_curve_csv(curve) == emit_curve_csv(sample_curve(s)));
    CHECK(emit_curve_json(curve, s) == emit_curve_json(sample_curve(s), s));
}

TEST_CASE("fig2 emission keeps the sandwich row-wise") {
    Scenario s = figure_preset("fig2", 1);
    s.grid = {0.0, 300.0, 301};
    for (const CurveSample& c : sample_curve(s)) {
        REQUIRE(c.c_lower.has_value());
        CHECK(*c.c_lower <= c.c_total + 1e-12);
        CHECK(c.c_total <= *c.c_upper + 1e-12);
    }
}

TEST_CASE("quick validation profile: structure and determinism") {
    const ValidationProfile profile = ValidationProfile::quick();
    const ValidationReport report = run_validation_suite(profile);
    CHECK(report.checks.size() >= 14);
    for (const CheckResult& c : report.checks)
        CHECK(c.pass);

    const ValidationReport again = run_validation_suite(profile);
    CHECK(validation_report_json(report, profile) == validation_report_json(again, profile));
}

TEST_CASE("zero oracle tolerance reports a failure with its margin") {
    ValidationProfile profile = ValidationProfile::quick();
    profile.oracle_t_cap = 5.0;
    profile.tol_oracle = 0.0;
    const ValidationReport report = run_validation_suite(profile);
    const CheckResult& oracle = report.check("oracle_equivalence");
    CHECK(!oracle.pass);
    CHECK(oracle.measured > 0.0);
    CHECK(!report.all_pass());
}
