#pragma once

namespace bilist {

inline constexpr const char* kVersion = "0.1.0";

} // namespace bilist
