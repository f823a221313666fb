#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "oaifs/index/config.hpp"

namespace oaifs::service {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ServiceConfig {
    index::DocRootConfig docroot;
    std::string listen_address;                 // host:port, port 0 = ephemeral
    std::string endpoint_path = "/oai";
    std::size_t page_size_records = 50;
    std::size_t page_size_identifiers = 500;
    std::uint64_t byvalue_threshold = 1 << 20;  // 1 MiB
    std::int64_t token_ttl_seconds = 86400;
    std::string admin_email = "admin@localhost";
    std::string repository_name = "oaifs repository";
    std::int64_t rescan_interval_seconds = 0;   // 0 = no automatic rescan
    std::string access_log_path;                // empty = no access log
    int max_inflight = 256;

    std::string oai_base_url() const { return docroot.base_url + endpoint_path; }

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// Flat key = value file, '#' comments. Unknown keys and invariant
/// violations raise ConfigError with the field name. OAIFS_LISTEN in the
/// environment overrides listen_address.
ServiceConfig load_config(const std::filesystem::path& path);

/// Parses config text (the file-less half of load_config).
ServiceConfig parse_config(const std::string& text);

/// Canonical text form; parse_config(dump_config(c)) == c.
std::string dump_config(const ServiceConfig& cfg);

}  // namespace oaifs::service
