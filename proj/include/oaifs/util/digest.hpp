#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace oaifs::util {

/// Lowercase hex SHA-256.
std::string sha256_hex(std::span<const std::uint8_t> data);
std::string sha256_hex(std::string_view data);

/// Streams the file; nullopt when it cannot be opened or read.
std::optional<std::string> sha256_hex_file(const std::filesystem::path& path);

}  // namespace oaifs::util
