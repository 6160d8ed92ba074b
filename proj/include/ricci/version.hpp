#pragma once

namespace ricci {
inline constexpr const char* kVersion = "ricci_s2 0.1.0";
}
