#pragma once

#include "qcc/experiments.hpp"

namespace qcc {

enum class OutputFormat {
    Csv,
    Json,
};

OutputFormat parse_output_format(const std::string& name);
const char* output_format_name(OutputFormat format);

// A parsed run request: the scenario plus optional output routing taken
// from the config document itself (flags may override both).
struct RunConfig {
    Scenario scenario;
    std::optional<std::string> out_path;
    std::optional<OutputFormat> format;
};

// Parses the JSON config document. Diagnostics name the offending key
// (e.g. "segments[0].duration").
RunConfig parse_config(const std::string& text);

// Inverse of parse_config; parse(emit(config)) reproduces the config.
std::string emit_config(const RunConfig& config);

}
