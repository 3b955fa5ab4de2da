#pragma once

namespace planeq {

inline constexpr const char* version = "0.1.0";

}  // namespace planeq
