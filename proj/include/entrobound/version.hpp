#pragma once

namespace entrobound {
inline constexpr const char* version = "0.1.0";
}
