#include "oaifs/util/url.hpp"

namespace oaifs::util {

namespace {

bool is_unreserved(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' ||
           c == '.' || c == '_' || c == '~';
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string percent_encode_segment(std::string_view segment) {
    static const char* digits = "0123456789ABCDEF";
    std::string out;
    out.reserve(segment.size());
    for (char c : segment) {
        if (is_unreserved(c)) {
            out += c;
        } else {
            unsigned char u = static_cast<unsigned char>(c);
            out += '%';
            out += digits[u >> 4];
            out += digits[u & 15];
        }
    }
    return out;
}

std::string percent_encode_path(std::string_view rel_path) {
    std::string out;
    std::size_t start = 0;
    while (start <= rel_path.size()) {
        std::size_t slash = rel_path.find('/', start);
        std::string_view seg = slash == std::string_view::npos ? rel_path.substr(start)
                                                               : rel_path.substr(start, slash - start);
        out += percent_encode_segment(seg);
        if (slash == std::string_view::npos) break;
        out += '/';
        start = slash + 1;
    }
    return out;
}

std::optional<std::string> percent_decode(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '%') {
            if (i + 2 >= s.size()) return std::nullopt;
            int hi = hex_value(s[i + 1]);
            int lo = hex_value(s[i + 2]);
            if (hi < 0 || lo < 0) return std::nullopt;
            out += static_cast<char>((hi << 4) | lo);
            i += 2;
        } else {
            out += s[i];
        }
    }
    return out;
}

std::optional<SplitUrl> split_url(std::string_view url) {
    std::size_t scheme_end = url.find("://");
    if (scheme_end == std::string_view::npos) return std::nullopt;
    std::size_t host_start = scheme_end + 3;
    if (host_start >= url.size()) return std::nullopt;
    std::size_t path_start = url.find('/', host_start);
    SplitUrl out;
    if (path_start == std::string_view::npos) {
        out.origin = std::string(url);
        out.path = "/";
    } else {
        out.origin = std::string(url.substr(0, path_start));
        out.path = std::string(url.substr(path_start));
    }
    return out;
}

}  // namespace oaifs::util
