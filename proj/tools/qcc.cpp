// qcc — complexity curves of a quenched harmonic chain.
//
// Subcommands:
//   run        config file -> curve file (CSV or JSON)
//   figure     built-in preset -> curve file
//   validate   full physics validation suite -> JSON report
//   expand     early-time and post-quench expansion coefficients of a config
//   crossover  crossing times between two curves
//
// Exit codes: 0 success, 1 I/O fault, 2 config or validation failure.

#include "qcc/emit.hpp"
#include "qcc/validation.hpp"
#include "qcc/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_io = 1;
constexpr int exit_validation = 2;

std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw std::ios_base::failure("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    if (!file)
        throw std::ios_base::failure("read from '" + path + "' failed");
    return buf.str();
}

void write_text(const std::string& text, const std::string& path) {
    if (path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::ios_base::failure("cannot open '" + path + "' for writing");
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!file)
        throw std::ios_base::failure("write to '" + path + "' failed");
}

struct CurveFlags {
    std::string out = "-";
    std::string format;
    std::string policy;
    std::string grid;
    bool quiet = false;
};

void add_curve_flags(CLI::App* cmd, CurveFlags& flags) {
    cmd->add_option("--out", flags.out, "output path ('-' = stdout)");
    cmd->add_option("--format", flags.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--policy", flags.policy, "fixed-initial or literal-segment")
        ->check(CLI::IsMember({"fixed-initial", "literal-segment"}));
    cmd->add_option("--grid", flags.grid, "override grid as start:end:samples");
    cmd->add_flag("--quiet", flags.quiet, "suppress the summary line");
}

qcc::GridSpec parse_grid_flag(const std::string& text) {
    qcc::GridSpec g;
    char sep1 = 0, sep2 = 0;
    std::istringstream in(text);
    if (!(in >> g.start >> sep1 >> g.end >> sep2 >> g.samples) || sep1 != ':' || sep2 != ':' ||
        !(in >> std::ws).eof())
        throw qcc::ConfigError("--grid must be start:end:samples");
    if (!(g.start < g.end) || g.samples < 2)
        throw qcc::ConfigError("--grid must satisfy start < end and samples >= 2");
    return g;
}

void apply_overrides(qcc::Scenario& scenario, const CurveFlags& flags) {
    if (!flags.policy.empty())
        scenario.policy = qcc::parse_lambda_policy(flags.policy);
    if (!flags.grid.empty())
        scenario.grid = parse_grid_flag(flags.grid);
}

int emit_scenario(const qcc::Scenario& scenario, const CurveFlags& flags,
                  qcc::OutputFormat format) {
    const std::vector<qcc::CurveSample> curve = qcc::sample_curve(scenario);
    qcc::emit_curve(curve, scenario, format, flags.out);
    if (!flags.quiet && flags.out != "-")
        std::fprintf(stderr, "wrote %zu samples to %s\n", curve.size(), flags.out.c_str());
    return exit_ok;
}

}

int main(int argc, char** argv) {
    CLI::App app{"complexity evolution of a quenched harmonic oscillator chain"};
    app.set_version_flag("--version", std::string("qcc ") + qcc::version);
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "evaluate a config file into a curve file");
    std::string run_config_path;
    run_cmd->add_option("--config", run_config_path, "JSON config")->required();
    CurveFlags run_flags;
    add_curve_flags(run_cmd, run_flags);

    // figure
    auto* fig_cmd = app.add_subcommand("figure", "evaluate a built-in preset");
    std::string fig_id;
    int fig_variant = 1;
    fig_cmd->add_option("id", fig_id, "preset id (fig1..fig11)")->required();
    fig_cmd->add_option("--variant", fig_variant, "1-based variant index");
    CurveFlags fig_flags;
    add_curve_flags(fig_cmd, fig_flags);

    // validate
    auto* val_cmd = app.add_subcommand("validate", "run the physics validation suite");
    std::string val_out = "-";
    bool val_quick = false;
    bool val_quiet = false;
    val_cmd->add_option("--out", val_out, "report path ('-' = stdout)");
    val_cmd->add_flag("--quick", val_quick, "reduced spans and oracle step (smoke run)");
    val_cmd->add_flag("--quiet", val_quiet, "suppress the summary line");

    // expand
    auto* exp_cmd = app.add_subcommand("expand", "series coefficients of a config");
    std::string exp_config_path;
    std::string exp_out = "-";
    exp_cmd->add_option("--config", exp_config_path, "JSON config")->required();
    exp_cmd->add_option("--out", exp_out, "output path ('-' = stdout)");

    // crossover
    auto* cross_cmd = app.add_subcommand("crossover", "crossing times between two curves");
    std::string cross_a, cross_b, cross_window;
    double cross_shift = 0.0;
    std::string cross_out = "-";
    cross_cmd->add_option("--config-a", cross_a, "first JSON config")->required();
    cross_cmd->add_option("--config-b", cross_b, "second JSON config")->required();
    cross_cmd->add_option("--window", cross_window, "comparison window lo:hi")->required();
    cross_cmd->add_option("--shift-b", cross_shift, "added to the second curve's time axis");
    cross_cmd->add_option("--out", cross_out, "output path ('-' = stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            qcc::RunConfig config = qcc::parse_config(slurp(run_config_path));
            apply_overrides(config.scenario, run_flags);
            qcc::OutputFormat format = config.format.value_or(qcc::OutputFormat::Csv);
            if (!run_flags.format.empty())
                format = qcc::parse_output_format(run_flags.format);
            CurveFlags flags = run_flags;
            if (flags.out == "-" && config.out_path)
                flags.out = *config.out_path;
            return emit_scenario(config.scenario, flags, format);
        }

        if (fig_cmd->parsed()) {
            qcc::Scenario scenario = qcc::figure_preset(fig_id, fig_variant);
            apply_overrides(scenario, fig_flags);
            const qcc::OutputFormat format = fig_flags.format.empty()
                                                 ? qcc::OutputFormat::Csv
                                                 : qcc::parse_output_format(fig_flags.format);
            return emit_scenario(scenario, fig_flags, format);
        }

        if (val_cmd->parsed()) {
            const qcc::ValidationProfile profile = val_quick
                                                       ? qcc::ValidationProfile::quick()
                                                       : qcc::ValidationProfile::defaults();
            const qcc::ValidationReport report = qcc::run_validation_suite(profile);
            write_text(qcc::validation_report_json(report, profile), val_out);
            if (!val_quiet) {
                long failed = 0;
                for (const qcc::CheckResult& c : report.checks)
                    if (!c.pass)
                        ++failed;
                std::fprintf(stderr, "%zu checks, %ld failed (oracle %.1f s)\n",
                             report.checks.size(), failed, report.oracle_seconds);
            }
            return report.all_pass() ? exit_ok : exit_validation;
        }

        if (exp_cmd->parsed()) {
            const qcc::RunConfig config = qcc::parse_config(slurp(exp_config_path));
            const qcc::QuenchSchedule& schedule = config.scenario.schedule;
            const qcc::EarlyTimeCoefficients co =
                qcc::early_time_coefficients(schedule.spec, schedule.segments[0]);
            std::string out;
            out += "a2 " + qcc::format_double(co.a2) + "\n";
            out += "a4 " + qcc::format_double(co.a4) + "\n";
            for (int i = 1; i <= schedule.n_segments(); ++i)
                out += "a_" + std::to_string(i) + "0 " +
                       qcc::format_double(
                           qcc::multi_quench_offset(schedule, i, config.scenario.policy)) +
                       "\n";
            write_text(out, exp_out);
            return exit_ok;
        }

        if (cross_cmd->parsed()) {
            const qcc::RunConfig ca = qcc::parse_config(slurp(cross_a));
            const qcc::RunConfig cb = qcc::parse_config(slurp(cross_b));
            const qcc::GridSpec window_spec = [&] {
                const size_t colon = cross_window.find(':');
                if (colon == std::string::npos)
                    throw qcc::ConfigError("--window must be lo:hi");
                qcc::GridSpec g;
                g.start = std::stod(cross_window.substr(0, colon));
                g.end = std::stod(cross_window.substr(colon + 1));
                return g;
            }();
            const auto curve_a = qcc::sample_curve(ca.scenario);
            const auto curve_b = qcc::sample_curve(cb.scenario);
            const std::vector<double> crossings = qcc::detect_crossover(
                curve_a, curve_b, window_spec.start, window_spec.end, cross_shift);
            std::string out;
            for (double t : crossings)
                out += qcc::format_double(t) + "\n";
            write_text(out, cross_out);
            return exit_ok;
        }
    } catch (const qcc::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_validation;
    } catch (const std::ios_base::failure& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_io;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_validation;
    }
    return exit_ok;
}
