#pragma once

#include <cstdint>
#include <string>

#include "oaifs/util/time.hpp"

namespace oaifs::index {

/// One harvestable file. The URL doubles as the OAI identifier.
struct ResourceRecord {
    std::string url;            // base_url + "/" + url-encoded rel_path
    std::string rel_path;       // '/' separated, relative to the doc root
    util::UtcSeconds datestamp; // file mtime, second granularity
    std::string media_type;
    std::uint64_t size_bytes = 0;
    std::string digest;         // sha-256 hex of the content
    std::string set_spec;       // "mime:type:subtype"
    bool shadowed = false;      // an alias claims this URL space

    bool operator==(const ResourceRecord&) const = default;
};

}  // namespace oaifs::index
