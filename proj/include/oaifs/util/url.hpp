#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace oaifs::util {

/// Percent-encodes one path segment (RFC 3986 unreserved characters pass).
std::string percent_encode_segment(std::string_view segment);

/// Encodes a relative path for use in a URL, preserving '/' separators.
std::string percent_encode_path(std::string_view rel_path);

/// Decodes %xx escapes; nullopt on malformed escapes. '+' is left as-is
/// (path context, not form context).
std::optional<std::string> percent_decode(std::string_view s);

struct SplitUrl {
    std::string origin;  // scheme://host[:port]
    std::string path;    // begins with '/', "/" when absent
};

/// Splits an absolute http(s) URL; nullopt when there is no scheme://host.
std::optional<SplitUrl> split_url(std::string_view url);

}  // namespace oaifs::util
