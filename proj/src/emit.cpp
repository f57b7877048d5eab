#include "qcc/emit.hpp"
#include "qcc/version.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>

namespace qcc {

namespace {

using nlohmann::ordered_json;

ordered_json scenario_metadata(const Scenario& scenario) {
    ordered_json meta;
    meta["tool"] = "qcc";
    meta["version"] = version;
    if (!scenario.label.empty())
        meta["label"] = scenario.label;
    if (!scenario.notes.empty())
        meta["notes"] = scenario.notes;
    meta["chain"] = {{"n", scenario.schedule.spec.n_oscillators},
                     {"omega0", scenario.schedule.spec.omega0},
                     {"k0", scenario.schedule.spec.coupling0}};
    ordered_json segs = ordered_json::array();
    for (const QuenchSegment& seg : scenario.schedule.segments) {
        ordered_json s = {{"omega", seg.omega}, {"k", seg.coupling}};
        if (seg.duration)
            s["duration"] = *seg.duration;
        segs.push_back(std::move(s));
    }
    meta["segments"] = std::move(segs);
    meta["grid"] = {{"start", scenario.grid.start},
                    {"end", scenario.grid.end},
                    {"samples", scenario.grid.samples}};
    meta["policy"] = lambda_policy_name(scenario.policy);
    if (scenario.successive)
        meta["successive"] = {{"t0", scenario.successive->t0}};
    return meta;
}

}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string emit_curve_csv(const std::vector<CurveSample>& curve) {
    if (curve.empty())
        throw std::invalid_argument("emit_curve: empty curve");
    const bool bounds = curve.front().c_lower.has_value();
    const size_t n_modes = curve.front().mode_a.size();

    std::string out;
    out.reserve(curve.size() * 80);
    out += "t,c_total,c_zero,c_rest";
    if (bounds)
        out += ",c_lower,c_upper";
    for (size_t j = 1; j <= n_modes; ++j)
        out += ",a_" + std::to_string(j);
    for (size_t j = 1; j <= n_modes; ++j)
        out += ",b_" + std::to_string(j);
    out += "\n";

    for (const CurveSample& s : curve) {
        out += format_double(s.t);
        out += ',';
        out += format_double(s.c_total);
        out += ',';
        out += format_double(s.c_zero);
        out += ',';
        out += format_double(s.c_rest);
        if (bounds) {
            out += ',';
            out += format_double(*s.c_lower);
            out += ',';
            out += format_double(*s.c_upper);
        }
        for (double a : s.mode_a) {
            out += ',';
            out += format_double(a);
        }
        for (double b : s.mode_b) {
            out += ',';
            out += format_double(b);
        }
        out += '\n';
    }
    return out;
}

std::string emit_curve_json(const std::vector<CurveSample>& curve, const Scenario& scenario) {
    if (curve.empty())
        throw std::invalid_argument("emit_curve: empty curve");
    const bool bounds = curve.front().c_lower.has_value();
    const size_t n_modes = curve.front().mode_a.size();

    ordered_json doc;
    doc["metadata"] = scenario_metadata(scenario);

    ordered_json data;
    auto column = [&curve](auto get) {
        ordered_json arr = ordered_json::array();
        for (const CurveSample& s : curve)
            arr.push_back(get(s));
        return arr;
    };
    data["t"] = column([](const CurveSample& s) { return s.t; });
    data["c_total"] = column([](const CurveSample& s) { return s.c_total; });
    data["c_zero"] = column([](const CurveSample& s) { return s.c_zero; });
    data["c_rest"] = column([](const CurveSample& s) { return s.c_rest; });
    if (bounds) {
        data["c_lower"] = column([](const CurveSample& s) { return *s.c_lower; });
        data["c_upper"] = column([](const CurveSample& s) { return *s.c_upper; });
    }
    for (size_t j = 0; j < n_modes; ++j) {
        data["a_" + std::to_string(j + 1)] =
            column([j](const CurveSample& s) { return s.mode_a[j]; });
    }
    for (size_t j = 0; j < n_modes; ++j) {
        data["b_" + std::to_string(j + 1)] =
            column([j](const CurveSample& s) { return s.mode_b[j]; });
    }
    doc["data"] = std::move(data);
    return doc.dump(2) + "\n";
}

void emit_curve(const std::vector<CurveSample>& curve, const Scenario& scenario,
                OutputFormat format, const std::string& path) {
    const std::string body =
        format == OutputFormat::Csv ? emit_curve_csv(curve) : emit_curve_json(curve, scenario);
    if (path == "-") {
        std::fwrite(body.data(), 1, body.size(), stdout);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::ios_base::failure("cannot open '" + path + "' for writing");
    file.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!file)
        throw std::ios_base::failure("write to '" + path + "' failed");
}

}
