// Build identifier embedded in reports and CLI --version output.
#pragma once

namespace tcct {

inline constexpr const char* kVersion = "tcct 1.0.0";

}  // namespace tcct
