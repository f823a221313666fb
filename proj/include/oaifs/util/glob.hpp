#pragma once

#include <string_view>

namespace oaifs::util {

/// Glob match over '/'-separated relative paths.
///   *   any run of characters within one path segment
///   ?   one character within a segment
///   **  any run of characters, crossing segment boundaries
bool glob_match(std::string_view pattern, std::string_view path);

}  // namespace oaifs::util
