#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "oaifs/index/config.hpp"
#include "oaifs/index/record.hpp"
#include "oaifs/util/time.hpp"

namespace oaifs::index {

class ScanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable, totally ordered index of one scan. Records are sorted by
/// (datestamp, url); resumption-token pagination depends on that order
/// never changing for a given snapshot_id.
class RepositorySnapshot {
public:
    RepositorySnapshot(std::vector<ResourceRecord> records, util::UtcSeconds created_at);

    const std::string& snapshot_id() const { return snapshot_id_; }
    util::UtcSeconds created_at() const { return created_at_; }
    const std::vector<ResourceRecord>& records() const { return records_; }
    util::UtcSeconds earliest_datestamp() const { return earliest_; }

    /// setSpec -> positions, every hierarchy level present ("mime",
    /// "mime:text", "mime:text:html").
    const std::map<std::string, std::vector<std::size_t>>& set_index() const { return set_index_; }

    const ResourceRecord* find_by_url(const std::string& url) const;

private:
    std::vector<ResourceRecord> records_;
    util::UtcSeconds created_at_;
    util::UtcSeconds earliest_;
    std::string snapshot_id_;
    std::map<std::string, std::vector<std::size_t>> set_index_;
    std::unordered_map<std::string, std::size_t> url_index_;
};

/// Walks the doc root and builds a snapshot. Unreadable individual files
/// are skipped with a warning to the optional sink; a missing or unreadable
/// root throws ScanError.
RepositorySnapshot scan(const DocRootConfig& config,
                        std::vector<std::string>* warnings = nullptr);

/// Selective-harvest filter: inclusive datestamp bounds, set membership by
/// hierarchy prefix, snapshot order preserved. Shadowed records stay in.
std::vector<ResourceRecord> filter_records(const RepositorySnapshot& snap,
                                           std::optional<util::UtcSeconds> from,
                                           std::optional<util::UtcSeconds> until,
                                           const std::optional<std::string>& set = std::nullopt);

/// True when the record's setSpec equals `set` or lies under it.
bool in_set(const ResourceRecord& rec, const std::string& set);

}  // namespace oaifs::index
