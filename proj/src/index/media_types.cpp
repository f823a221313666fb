#include "oaifs/index/media_types.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace oaifs::index {

namespace {

const std::unordered_map<std::string, std::string>& extension_table() {
    static const std::unordered_map<std::string, std::string> table = {
        {".html", "text/html"},
        {".htm", "text/html"},
        {".shtml", "text/html"},
        {".txt", "text/plain"},
        {".text", "text/plain"},
        {".md", "text/markdown"},
        {".css", "text/css"},
        {".csv", "text/csv"},
        {".js", "application/javascript"},
        {".json", "application/json"},
        {".xml", "text/xml"},
        {".xsd", "text/xml"},
        {".xsl", "text/xml"},
        {".pdf", "application/pdf"},
        {".ps", "application/postscript"},
        {".doc", "application/msword"},
        {".ppt", "application/vnd.ms-powerpoint"},
        {".xls", "application/vnd.ms-excel"},
        {".zip", "application/zip"},
        {".gz", "application/gzip"},
        {".tar", "application/x-tar"},
        {".png", "image/png"},
        {".jpg", "image/jpeg"},
        {".jpeg", "image/jpeg"},
        {".gif", "image/gif"},
        {".svg", "image/svg+xml"},
        {".ico", "image/x-icon"},
        {".bmp", "image/bmp"},
        {".tif", "image/tiff"},
        {".tiff", "image/tiff"},
        {".mp3", "audio/mpeg"},
        {".wav", "audio/x-wav"},
        {".mp4", "video/mp4"},
        {".mpg", "video/mpeg"},
        {".mpeg", "video/mpeg"},
        {".avi", "video/x-msvideo"},
        {".c", "text/plain"},
        {".h", "text/plain"},
        {".cc", "text/plain"},
        {".cpp", "text/plain"},
        {".hpp", "text/plain"},
        {".py", "text/plain"},
        {".tex", "application/x-tex"},
        {".rtf", "application/rtf"},
    };
    return table;
}

bool set_spec_char_ok(char c) {
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) return true;
    switch (c) {
        case '-':
        case '_':
        case '.':
        case '!':
        case '~':
        case '*':
        case '\'':
        case '(':
        case ')':
            return true;
        default:
            return false;
    }
}

std::string sanitize_token(std::string_view token) {
    std::string out;
    out.reserve(token.size());
    for (char c : token) out += set_spec_char_ok(c) ? c : '.';
    return out;
}

}  // namespace

std::string media_type_of(std::string_view rel_path) {
    std::size_t slash = rel_path.find_last_of('/');
    std::string_view name = slash == std::string_view::npos ? rel_path : rel_path.substr(slash + 1);
    std::size_t dot = name.find_last_of('.');
    if (dot == std::string_view::npos || dot == 0) return "application/octet-stream";
    std::string ext(name.substr(dot));
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    const auto& table = extension_table();
    auto it = table.find(ext);
    return it == table.end() ? "application/octet-stream" : it->second;
}

std::string set_spec_of(std::string_view media_type) {
    std::size_t slash = media_type.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 >= media_type.size() ||
        media_type.find('/', slash + 1) != std::string_view::npos) {
        return "mime:application:octet-stream";
    }
    return "mime:" + sanitize_token(media_type.substr(0, slash)) + ":" +
           sanitize_token(media_type.substr(slash + 1));
}

}  // namespace oaifs::index
