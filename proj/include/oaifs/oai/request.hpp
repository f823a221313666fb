#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "oaifs/util/time.hpp"

namespace oaifs::oai {

enum class Verb {
    identify,
    list_metadata_formats,
    list_sets,
    list_identifiers,
    list_records,
    get_record,
};

std::string_view verb_name(Verb v);
std::optional<Verb> verb_from_name(std::string_view name);

/// The protocol's closed error vocabulary.
enum class ErrorCode {
    bad_verb,
    bad_argument,
    bad_resumption_token,
    cannot_disseminate_format,
    id_does_not_exist,
    no_records_match,
    no_set_hierarchy,
    no_metadata_formats,
};

std::string_view error_code_name(ErrorCode code);

struct OaiError {
    ErrorCode code;
    std::string message;
};

/// A validated protocol request. Raw argument strings are kept for the
/// request echo; parsed datestamps carry the widened bounds.
struct OaiRequest {
    Verb verb = Verb::identify;
    std::optional<std::string> identifier;
    std::optional<std::string> metadata_prefix;
    std::optional<std::string> from_raw;
    std::optional<std::string> until_raw;
    std::optional<std::string> set;
    std::optional<std::string> resumption_token;

    std::optional<util::UtcSeconds> from;   // widened to day start for date-only
    std::optional<util::UtcSeconds> until;  // widened to day end for date-only
};

using Params = std::vector<std::pair<std::string, std::string>>;

/// Validates the verb/argument legality matrix. Protocol failures come
/// back in-band as OaiError, never as exceptions.
std::variant<OaiRequest, OaiError> parse_request(const Params& params);

}  // namespace oaifs::oai
