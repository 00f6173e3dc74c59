#pragma once

namespace ewave {
inline constexpr const char* EWAVE_VERSION = "0.1.0";
}
