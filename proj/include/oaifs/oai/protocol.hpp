#pragma once

#include <cstddef>
#include <span>
#include <variant>

#include "oaifs/index/snapshot.hpp"
#include "oaifs/oai/response.hpp"
#include "oaifs/service/config.hpp"

namespace oaifs::oai {

/// One page of a paginated list.
struct PageResult {
    std::size_t begin = 0;  // offsets into the matching list
    std::size_t end = 0;
    std::optional<ResumptionToken> next;
    std::uint64_t complete_list_size = 0;
};

/// Slices [cursor, cursor+page_size) and issues the follow-up token when
/// records remain. The repository, not the harvester, picks page_size.
PageResult paginate(std::size_t matching_size, std::size_t cursor, std::size_t page_size,
                    const ResumptionToken& token_template);

struct ResumeResult {
    OaiRequest request;
    std::uint64_t cursor = 0;
};

/// Decodes and validates a presented token against the current snapshot.
/// Stale snapshot, expiry, tamper and garbage all come back as
/// badResumptionToken.
std::variant<ResumeResult, OaiError> resume(const std::string& token_string, Verb verb,
                                            const index::RepositorySnapshot& snap,
                                            const service::ServiceConfig& cfg,
                                            util::UtcSeconds now);

/// Runs a validated request against a snapshot. Pure; all protocol
/// failures surface as in-band OaiError payloads.
OaiResponse dispatch(const OaiRequest& req, const index::RepositorySnapshot& snap,
                     const service::ServiceConfig& cfg, util::UtcSeconds now);

}  // namespace oaifs::oai
