#pragma once

namespace brlab {
inline constexpr const char* kVersion = "0.1.0";
}
