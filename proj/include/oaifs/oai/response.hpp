#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oaifs/oai/request.hpp"
#include "oaifs/oai/token.hpp"
#include "oaifs/util/time.hpp"

namespace oaifs::oai {

struct RecordHeader {
    std::string identifier;
    util::UtcSeconds datestamp;
    std::string set_spec;
};

struct RenderedRecord {
    RecordHeader header;
    std::string metadata_xml;  // format-specific fragment
};

/// Pagination trailer. `value` empty with present=true is the protocol's
/// "empty token closes the chain" marker on the final incomplete list.
struct TokenTrailer {
    std::string value;
    std::uint64_t complete_list_size = 0;
    std::uint64_t cursor = 0;  // offset of the first record in this page
};

struct IdentifyBody {
    std::string repository_name;
    std::string base_url;
    std::string protocol_version = "2.0";
    std::string admin_email;
    util::UtcSeconds earliest_datestamp;
    std::string deleted_record = "no";
    std::string granularity = "YYYY-MM-DDThh:mm:ssZ";
};

struct FormatEntry {
    std::string prefix;
    std::string schema;
    std::string ns;
};
struct MetadataFormatsBody {
    std::vector<FormatEntry> formats;
};

struct SetEntry {
    std::string spec;
    std::string name;
};
struct SetsBody {
    std::vector<SetEntry> sets;
};

struct IdentifiersBody {
    std::vector<RecordHeader> headers;
    std::optional<TokenTrailer> token;
};

struct RecordsBody {
    std::vector<RenderedRecord> records;
    std::optional<TokenTrailer> token;
};

struct SingleRecordBody {
    RenderedRecord record;
};

using ResponseBody = std::variant<IdentifyBody, MetadataFormatsBody, SetsBody, IdentifiersBody,
                                  RecordsBody, SingleRecordBody, OaiError>;

struct OaiResponse {
    util::UtcSeconds response_date;
    OaiRequest request_echo;
    bool echo_attributes = true;  // false on badVerb/badArgument per protocol
    std::string base_request_url;
    ResponseBody body;

    bool is_error() const { return std::holds_alternative<OaiError>(body); }
};

/// Deterministic OAI-PMH 2.0 XML for a response object.
std::string render_response(const OaiResponse& resp);

}  // namespace oaifs::oai
