#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "oaifs/oai/request.hpp"
#include "oaifs/util/time.hpp"

namespace oaifs::oai {

/// Stateless pagination cursor. Everything needed to continue the list —
/// the query, the snapshot it ran against, and the offset — travels inside
/// the token; a truncated SHA-256 over the payload catches mutation. No
/// server-side session survives alongside it, which is what lets a chain
/// continue across service restarts.
struct ResumptionToken {
    Verb verb = Verb::list_records;
    std::string metadata_prefix;
    std::optional<std::string> from_raw;
    std::optional<std::string> until_raw;
    std::optional<std::string> set;
    std::string query_digest;       // hash over (verb, prefix, from, until, set)
    std::string snapshot_id;
    std::uint64_t cursor = 0;       // offset of the next page's first record
    std::uint64_t complete_list_size = 0;
    util::UtcSeconds issued_at;

    bool operator==(const ResumptionToken&) const = default;
};

std::string query_digest_of(Verb verb, const std::string& prefix,
                            const std::optional<std::string>& from_raw,
                            const std::optional<std::string>& until_raw,
                            const std::optional<std::string>& set);

/// URL-safe opaque string.
std::string serialize_token(const ResumptionToken& token);

/// Integrity-checked decode; nullopt for anything undecodable or tampered.
std::optional<ResumptionToken> deserialize_token(const std::string& text);

}  // namespace oaifs::oai
