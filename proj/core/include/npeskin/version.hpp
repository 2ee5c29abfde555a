#pragma once

namespace npeskin {

inline constexpr const char* version = "0.1.0";

}  // namespace npeskin
