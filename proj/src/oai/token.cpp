#include "oaifs/oai/token.hpp"

#include <vector>

#include "oaifs/util/base64.hpp"
#include "oaifs/util/digest.hpp"

namespace oaifs::oai {

namespace {

constexpr char kVersionTag[] = "oaifs-token-1";

std::string b64url_encode(std::string_view s) {
    std::string out = util::base64_encode(
        std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
    for (char& c : out) {
        if (c == '+') c = '-';
        else if (c == '/') c = '_';
    }
    while (!out.empty() && out.back() == '=') out.pop_back();
    return out;
}

std::optional<std::string> b64url_decode(std::string_view s) {
    std::string padded(s);
    for (char& c : padded) {
        if (c == '-') c = '+';
        else if (c == '_') c = '/';
    }
    while (padded.size() % 4 != 0) padded += '=';
    auto bytes = util::base64_decode(padded);
    if (!bytes) return std::nullopt;
    return std::string(bytes->begin(), bytes->end());
}

std::string join_fields(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += '\n';
        out += fields[i];
    }
    return out;
}

std::vector<std::string> split_fields(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t nl = s.find('\n', start);
        if (nl == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, nl - start));
        start = nl + 1;
    }
}

}  // namespace

std::string query_digest_of(Verb verb, const std::string& prefix,
                            const std::optional<std::string>& from_raw,
                            const std::optional<std::string>& until_raw,
                            const std::optional<std::string>& set) {
    std::string material = std::string(verb_name(verb)) + "\n" + prefix + "\n" +
                           from_raw.value_or("") + "\n" + until_raw.value_or("") + "\n" +
                           set.value_or("");
    return util::sha256_hex(material).substr(0, 16);
}

std::string serialize_token(const ResumptionToken& token) {
    std::vector<std::string> fields = {
        kVersionTag,
        std::string(verb_name(token.verb)),
        token.metadata_prefix,
        token.from_raw.value_or(""),
        token.until_raw.value_or(""),
        token.set.value_or(""),
        token.query_digest,
        token.snapshot_id,
        std::to_string(token.cursor),
        std::to_string(token.complete_list_size),
        std::to_string(token.issued_at.value),
    };
    std::string payload = join_fields(fields);
    std::string mac = util::sha256_hex(payload).substr(0, 16);
    return b64url_encode(payload + "\n" + mac);
}

std::optional<ResumptionToken> deserialize_token(const std::string& text) {
    auto payload_and_mac = b64url_decode(text);
    if (!payload_and_mac) return std::nullopt;
    std::size_t last_nl = payload_and_mac->rfind('\n');
    if (last_nl == std::string::npos) return std::nullopt;
    std::string payload = payload_and_mac->substr(0, last_nl);
    std::string mac = payload_and_mac->substr(last_nl + 1);
    if (util::sha256_hex(payload).substr(0, 16) != mac) return std::nullopt;

    std::vector<std::string> fields = split_fields(payload);
    if (fields.size() != 11 || fields[0] != kVersionTag) return std::nullopt;

    ResumptionToken token;
    auto verb = verb_from_name(fields[1]);
    if (!verb) return std::nullopt;
    token.verb = *verb;
    token.metadata_prefix = fields[2];
    if (!fields[3].empty()) token.from_raw = fields[3];
    if (!fields[4].empty()) token.until_raw = fields[4];
    if (!fields[5].empty()) token.set = fields[5];
    token.query_digest = fields[6];
    token.snapshot_id = fields[7];
    try {
        token.cursor = std::stoull(fields[8]);
        token.complete_list_size = std::stoull(fields[9]);
        token.issued_at = util::UtcSeconds{std::stoll(fields[10])};
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (token.query_digest != query_digest_of(token.verb, token.metadata_prefix, token.from_raw,
                                              token.until_raw, token.set))
        return std::nullopt;
    if (token.cursor >= token.complete_list_size) return std::nullopt;  // never issued
    return token;
}

}  // namespace oaifs::oai
