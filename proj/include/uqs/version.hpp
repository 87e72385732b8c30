#pragma once

namespace uqs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace uqs
