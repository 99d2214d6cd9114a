#pragma once

namespace rhm {
inline constexpr const char* kVersion = "1.0.0";
}
