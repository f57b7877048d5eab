#include "qcc/config.hpp"

#include <json.hpp>

namespace qcc {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
    throw ConfigError("config: " + key + " " + why);
}

const ordered_json& require(const ordered_json& obj, const std::string& key,
                            const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end())
        bad_key(path, "is missing");
    return *it;
}

double number_at(const ordered_json& obj, const std::string& key, const std::string& path) {
    const ordered_json& v = require(obj, key, path);
    if (!v.is_number())
        bad_key(path, "must be a number");
    return v.get<double>();
}

int int_at(const ordered_json& obj, const std::string& key, const std::string& path) {
    const ordered_json& v = require(obj, key, path);
    if (!v.is_number_integer())
        bad_key(path, "must be an integer");
    return v.get<int>();
}

}

OutputFormat parse_output_format(const std::string& name) {
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "json")
        return OutputFormat::Json;
    throw ConfigError("unknown format '" + name + "' (expected csv or json)");
}

const char* output_format_name(OutputFormat format) {
    return format == OutputFormat::Csv ? "csv" : "json";
}

RunConfig parse_config(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config: not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ConfigError("config: top-level document must be an object");

    const ordered_json& chain = require(doc, "chain", "chain");
    ChainSpec spec;
    spec.n_oscillators = int_at(chain, "n", "chain.n");
    if (spec.n_oscillators < 1)
        bad_key("chain.n", "must be >= 1");
    spec.omega0 = number_at(chain, "omega0", "chain.omega0");
    if (spec.omega0 < 0)
        bad_key("chain.omega0", "must be >= 0");
    spec.coupling0 = number_at(chain, "k0", "chain.k0");
    if (spec.coupling0 < 0)
        bad_key("chain.k0", "must be >= 0");

    const ordered_json& segs = require(doc, "segments", "segments");
    if (!segs.is_array() || segs.empty())
        bad_key("segments", "must be a non-empty array");
    std::vector<QuenchSegment> segments;
    for (size_t i = 0; i < segs.size(); ++i) {
        const std::string path = "segments[" + std::to_string(i) + "]";
        const ordered_json& s = segs[i];
        if (!s.is_object())
            bad_key(path, "must be an object");
        QuenchSegment seg;
        seg.omega = number_at(s, "omega", path + ".omega");
        if (seg.omega < 0)
            bad_key(path + ".omega", "must be >= 0");
        seg.coupling = number_at(s, "k", path + ".k");
        if (seg.coupling < 0)
            bad_key(path + ".k", "must be >= 0");
        if (s.contains("duration") && !s["duration"].is_null()) {
            if (!s["duration"].is_number())
                bad_key(path + ".duration", "must be a number");
            const double d = s["duration"].get<double>();
            if (!(d > 0))
                bad_key(path + ".duration", "must be > 0");
            seg.duration = d;
        } else if (i + 1 != segs.size()) {
            bad_key(path + ".duration", "is missing (only the last segment may be open-ended)");
        }
        segments.push_back(seg);
    }

    const ordered_json& grid = require(doc, "grid", "grid");
    GridSpec g;
    g.start = number_at(grid, "start", "grid.start");
    g.end = number_at(grid, "end", "grid.end");
    g.samples = int_at(grid, "samples", "grid.samples");
    if (!(g.start < g.end))
        bad_key("grid.end", "must be > grid.start");
    if (g.samples < 2)
        bad_key("grid.samples", "must be >= 2");

    RunConfig config;
    Scenario& sc = config.scenario;
    try {
        sc.schedule = QuenchSchedule::make(spec, std::move(segments));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    sc.grid = g;
    sc.policy = LambdaPolicy::FixedInitial;
    if (doc.contains("policy")) {
        if (!doc["policy"].is_string())
            bad_key("policy", "must be a string");
        sc.policy = parse_lambda_policy(doc["policy"].get<std::string>());
    }

    if (doc.contains("outputs")) {
        const ordered_json& outs = doc["outputs"];
        if (!outs.is_object())
            bad_key("outputs", "must be an object");
        if (outs.contains("per_mode")) {
            if (!outs["per_mode"].is_boolean())
                bad_key("outputs.per_mode", "must be a boolean");
            sc.emit_per_mode = outs["per_mode"].get<bool>();
        }
        if (outs.contains("bounds")) {
            if (!outs["bounds"].is_boolean())
                bad_key("outputs.bounds", "must be a boolean");
            sc.emit_bounds = outs["bounds"].get<bool>();
        }
        if (outs.contains("successive") && !outs["successive"].is_null()) {
            const ordered_json& succ = outs["successive"];
            if (!succ.is_object())
                bad_key("outputs.successive", "must be an object");
            SuccessiveSpec ss;
            ss.t0 = number_at(succ, "t0", "outputs.successive.t0");
            if (ss.t0 < 0)
                bad_key("outputs.successive.t0", "must be >= 0");
            sc.successive = ss;
        }
    }
    if (doc.contains("label")) {
        if (!doc["label"].is_string())
            bad_key("label", "must be a string");
        sc.label = doc["label"].get<std::string>();
    }
    if (doc.contains("output")) {
        const ordered_json& out = doc["output"];
        if (!out.is_object())
            bad_key("output", "must be an object");
        if (out.contains("path")) {
            if (!out["path"].is_string())
                bad_key("output.path", "must be a string");
            config.out_path = out["path"].get<std::string>();
        }
        if (out.contains("format")) {
            if (!out["format"].is_string())
                bad_key("output.format", "must be a string");
            config.format = parse_output_format(out["format"].get<std::string>());
        }
    }
    return config;
}

std::string emit_config(const RunConfig& config) {
    const Scenario& sc = config.scenario;
    ordered_json doc;
    doc["chain"] = {{"n", sc.schedule.spec.n_oscillators},
                    {"omega0", sc.schedule.spec.omega0},
                    {"k0", sc.schedule.spec.coupling0}};
    ordered_json segs = ordered_json::array();
    for (const QuenchSegment& seg : sc.schedule.segments) {
        ordered_json s = {{"omega", seg.omega}, {"k", seg.coupling}};
        if (seg.duration)
            s["duration"] = *seg.duration;
        segs.push_back(std::move(s));
    }
    doc["segments"] = std::move(segs);
    doc["grid"] = {{"start", sc.grid.start}, {"end", sc.grid.end}, {"samples", sc.grid.samples}};
    doc["policy"] = lambda_policy_name(sc.policy);
    ordered_json outs;
    outs["per_mode"] = sc.emit_per_mode;
    outs["bounds"] = sc.emit_bounds;
    if (sc.successive)
        outs["successive"] = {{"t0", sc.successive->t0}};
    doc["outputs"] = std::move(outs);
    if (!sc.label.empty())
        doc["label"] = sc.label;
    if (config.out_path || config.format) {
        ordered_json out;
        if (config.out_path)
            out["path"] = *config.out_path;
        if (config.format)
            out["format"] = output_format_name(*config.format);
        doc["output"] = std::move(out);
    }
    return doc.dump(2) + "\n";
}

}
