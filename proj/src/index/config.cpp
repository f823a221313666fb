#include "oaifs/index/config.hpp"

#include <algorithm>
#include <cctype>

namespace oaifs::index {

void DocRootConfig::normalize() {
    while (!base_url.empty() && base_url.back() == '/') base_url.pop_back();
    for (auto& ext : excluded_extensions) {
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (!ext.empty() && ext.front() != '.') ext.insert(ext.begin(), '.');
    }
    for (auto& alias : alias_table) {
        while (alias.url_prefix.size() > 1 && alias.url_prefix.back() == '/') alias.url_prefix.pop_back();
        if (alias.url_prefix.empty() || alias.url_prefix.front() != '/')
            alias.url_prefix.insert(alias.url_prefix.begin(), '/');
    }
}

std::vector<std::string> DocRootConfig::default_excluded_extensions() {
    return {".php", ".cgi", ".shtml", ".jsp"};
}

std::vector<std::string> DocRootConfig::default_excluded_patterns() {
    return {"oai", "oai/**"};
}

}  // namespace oaifs::index
