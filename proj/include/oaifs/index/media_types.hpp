#pragma once

#include <string>
#include <string_view>

namespace oaifs::index {

/// Extension-based lookup, case-insensitive; unknown extensions fall back
/// to application/octet-stream.
std::string media_type_of(std::string_view rel_path);

/// "text/html" -> "mime:text:html". Characters outside the setSpec charset
/// are mapped to '.'; malformed media types fall back to the octet-stream set.
std::string set_spec_of(std::string_view media_type);

}  // namespace oaifs::index
