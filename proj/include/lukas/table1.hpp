#pragma once

#include <cstdint>
#include <optional>

#include "lukas/patterns.hpp"

namespace lukas {

/// Published class counts a_1..a_10 for each relation (vendored fixture).
/// Returns nullopt outside 1 <= n <= 10.
std::optional<std::uint64_t> table1_value(Relation r, int n);

}  // namespace lukas
