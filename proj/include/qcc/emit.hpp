#pragma once

#include "qcc/config.hpp"

namespace qcc {

// CSV with header row
//   t,c_total,c_zero,c_rest[,c_lower,c_upper][,a_1..a_N,b_1..b_N]
// every value printed with 17 significant digits, locale-independent,
// newline-terminated rows.
std::string emit_curve_csv(const std::vector<CurveSample>& curve);

// Same columns as arrays plus scenario metadata (parameters, policy, grid,
// software version).
std::string emit_curve_json(const std::vector<CurveSample>& curve, const Scenario& scenario);

// Writes to path (or stdout when path is "-"); throws std::ios_base::failure
// on I/O faults.
void emit_curve(const std::vector<CurveSample>& curve, const Scenario& scenario,
                OutputFormat format, const std::string& path);

// 17-significant-digit, locale-independent rendering used by the CSV writer.
std::string format_double(double v);

}
