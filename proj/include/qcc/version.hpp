#pragma once

namespace qcc {

inline constexpr const char* version = "1.0.0";

}
