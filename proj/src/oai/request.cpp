#include "oaifs/oai/request.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace oaifs::oai {

std::string_view verb_name(Verb v) {
    switch (v) {
        case Verb::identify: return "Identify";
        case Verb::list_metadata_formats: return "ListMetadataFormats";
        case Verb::list_sets: return "ListSets";
        case Verb::list_identifiers: return "ListIdentifiers";
        case Verb::list_records: return "ListRecords";
        case Verb::get_record: return "GetRecord";
    }
    return "";
}

std::optional<Verb> verb_from_name(std::string_view name) {
    static const std::array<Verb, 6> verbs = {Verb::identify,        Verb::list_metadata_formats,
                                              Verb::list_sets,       Verb::list_identifiers,
                                              Verb::list_records,    Verb::get_record};
    for (Verb v : verbs)
        if (verb_name(v) == name) return v;
    return std::nullopt;
}

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::bad_verb: return "badVerb";
        case ErrorCode::bad_argument: return "badArgument";
        case ErrorCode::bad_resumption_token: return "badResumptionToken";
        case ErrorCode::cannot_disseminate_format: return "cannotDisseminateFormat";
        case ErrorCode::id_does_not_exist: return "idDoesNotExist";
        case ErrorCode::no_records_match: return "noRecordsMatch";
        case ErrorCode::no_set_hierarchy: return "noSetHierarchy";
        case ErrorCode::no_metadata_formats: return "noMetadataFormats";
    }
    return "";
}

namespace {

bool token_char_ok(char c) {
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

bool valid_set_spec(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = 0;
    for (;;) {
        std::size_t colon = s.find(':', start);
        std::string_view tok = colon == std::string::npos
                                   ? std::string_view(s).substr(start)
                                   : std::string_view(s).substr(start, colon - start);
        if (tok.empty()) return false;
        if (!std::all_of(tok.begin(), tok.end(), token_char_ok)) return false;
        if (colon == std::string::npos) return true;
        start = colon + 1;
    }
}

bool valid_metadata_prefix(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), token_char_ok);
}

OaiError bad_argument(const std::string& msg) {
    return OaiError{ErrorCode::bad_argument, msg};
}

}  // namespace

std::variant<OaiRequest, OaiError> parse_request(const Params& params) {
    static const char* known_names[] = {"verb", "identifier", "metadataPrefix", "from",
                                        "until", "set",        "resumptionToken"};

    std::map<std::string, std::string> seen;
    int verb_count = 0;
    for (const auto& [name, value] : params) {
        if (name == "verb") ++verb_count;
        bool known = std::any_of(std::begin(known_names), std::end(known_names),
                                 [&](const char* k) { return name == k; });
        if (!known) return bad_argument("unknown argument: " + name);
        auto [it, inserted] = seen.emplace(name, value);
        if (!inserted && name != "verb") return bad_argument("duplicate argument: " + name);
    }
    if (verb_count == 0) return OaiError{ErrorCode::bad_verb, "missing verb argument"};
    if (verb_count > 1) return OaiError{ErrorCode::bad_verb, "repeated verb argument"};

    auto verb = verb_from_name(seen.at("verb"));
    if (!verb) return OaiError{ErrorCode::bad_verb, "unknown verb: " + seen.at("verb")};

    OaiRequest req;
    req.verb = *verb;
    auto take = [&](const char* name) -> std::optional<std::string> {
        auto it = seen.find(name);
        if (it == seen.end()) return std::nullopt;
        return it->second;
    };
    req.identifier = take("identifier");
    req.metadata_prefix = take("metadataPrefix");
    req.from_raw = take("from");
    req.until_raw = take("until");
    req.set = take("set");
    req.resumption_token = take("resumptionToken");

    auto illegal = [&](const char* name) {
        return bad_argument(std::string(name) + " is not a legal argument for verb " +
                            std::string(verb_name(req.verb)));
    };

    switch (req.verb) {
        case Verb::identify:
            if (req.identifier) return illegal("identifier");
            if (req.metadata_prefix) return illegal("metadataPrefix");
            if (req.from_raw) return illegal("from");
            if (req.until_raw) return illegal("until");
            if (req.set) return illegal("set");
            if (req.resumption_token) return illegal("resumptionToken");
            break;
        case Verb::list_metadata_formats:
            if (req.metadata_prefix) return illegal("metadataPrefix");
            if (req.from_raw) return illegal("from");
            if (req.until_raw) return illegal("until");
            if (req.set) return illegal("set");
            if (req.resumption_token) return illegal("resumptionToken");
            break;
        case Verb::list_sets:
            if (req.identifier) return illegal("identifier");
            if (req.metadata_prefix) return illegal("metadataPrefix");
            if (req.from_raw) return illegal("from");
            if (req.until_raw) return illegal("until");
            if (req.set) return illegal("set");
            break;
        case Verb::get_record:
            if (req.from_raw) return illegal("from");
            if (req.until_raw) return illegal("until");
            if (req.set) return illegal("set");
            if (req.resumption_token) return illegal("resumptionToken");
            if (!req.identifier) return bad_argument("GetRecord requires identifier");
            if (!req.metadata_prefix) return bad_argument("GetRecord requires metadataPrefix");
            break;
        case Verb::list_identifiers:
        case Verb::list_records:
            if (req.identifier) return illegal("identifier");
            if (req.resumption_token) {
                // exclusive: verb + resumptionToken and nothing else
                if (req.metadata_prefix || req.from_raw || req.until_raw || req.set)
                    return bad_argument("resumptionToken is exclusive of all other arguments");
            } else if (!req.metadata_prefix) {
                return bad_argument(std::string(verb_name(req.verb)) +
                                    " requires metadataPrefix");
            }
            break;
    }

    if (req.identifier && req.identifier->empty()) return bad_argument("identifier is empty");
    if (req.resumption_token && req.resumption_token->empty())
        return bad_argument("resumptionToken is empty");
    if (req.metadata_prefix && !valid_metadata_prefix(*req.metadata_prefix))
        return bad_argument("malformed metadataPrefix");
    if (req.set && !valid_set_spec(*req.set)) return bad_argument("malformed set argument");

    std::optional<util::DateGranularity> from_gran, until_gran;
    if (req.from_raw) {
        auto parsed = util::parse_datestamp(*req.from_raw);
        if (!parsed) return bad_argument("malformed from argument: " + *req.from_raw);
        req.from = parsed->start;
        from_gran = parsed->granularity;
    }
    if (req.until_raw) {
        auto parsed = util::parse_datestamp(*req.until_raw);
        if (!parsed) return bad_argument("malformed until argument: " + *req.until_raw);
        req.until = parsed->end;
        until_gran = parsed->granularity;
    }
    if (from_gran && until_gran) {
        if (*from_gran != *until_gran)
            return bad_argument("from and until have different granularities");
        if (*req.from > *req.until) return bad_argument("from is later than until");
    }

    return req;
}

}  // namespace oaifs::oai
