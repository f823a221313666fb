#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oaifs::util {

/// Canonical RFC 4648 base64, no line wrapping.
std::string base64_encode(std::span<const std::uint8_t> data);

/// Strict decoder: rejects bad alphabet characters, wrong padding and
/// non-zero discarded bits (non-canonical final quantum). Whitespace is
/// tolerated anywhere so wrapped input from other producers decodes.
std::optional<std::vector<std::uint8_t>> base64_decode(std::string_view text);

}  // namespace oaifs::util
