#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oaifs/index/record.hpp"
#include "oaifs/util/time.hpp"
#include "oaifs/xml/parser.hpp"

namespace oaifs::codecs {

inline constexpr std::string_view kServerToken = "oaifs/0.1";

inline constexpr std::string_view kDidlNamespace = "urn:mpeg:mpeg21:2002:02-DIDL-NS";
inline constexpr std::string_view kDiiNamespace = "urn:mpeg:mpeg21:2002:01-DII-NS";
inline constexpr std::string_view kHttpHeaderNamespace = "urn:oaifs:http-header";
inline constexpr std::string_view kOaiDcNamespace = "http://www.openarchives.org/OAI/2.0/oai_dc/";
inline constexpr std::string_view kDcNamespace = "http://purl.org/dc/elements/1.1/";

enum class CodecErrorKind {
    parse,      // malformed XML
    structure,  // mandatory element/attribute missing
    content,    // base64 decode failure
    integrity,  // length or digest disagreement
};

class CodecError : public std::runtime_error {
public:
    CodecError(CodecErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    CodecErrorKind kind() const { return kind_; }

private:
    CodecErrorKind kind_;
};

/// What a conditional-free GET of the resource would answer.
struct HttpHeaderBlock {
    std::string content_type;
    std::uint64_t content_length = 0;
    util::UtcSeconds last_modified;
    std::string server;
    std::optional<std::string> digest;  // "sha-256=<hex>"

    bool operator==(const HttpHeaderBlock&) const = default;
};

HttpHeaderBlock header_block_for(const index::ResourceRecord& rec);

/// Decoded DIDL complex object.
struct DidlDocument {
    std::string identifier;                         // DII identifier descriptor
    HttpHeaderBlock headers;
    std::string by_ref;                             // always present
    std::optional<std::vector<std::uint8_t>> by_value;
    std::string media_type;
};

/// Unqualified Dublin Core fragment (dc:identifier, dc:date, dc:format).
std::string encode_dc(const index::ResourceRecord& rec);

/// Fixed-order five-field header fragment.
std::string encode_http_header(const HttpHeaderBlock& block);
std::string encode_http_header(const index::ResourceRecord& rec);

/// MPEG-21 DIDL fragment: Item with identifier + header descriptors and a
/// Component carrying a by-ref Resource, plus a base64 by-value Resource
/// when the content fits the threshold. Throws CodecError(integrity) when
/// `content` does not hash to rec.digest.
std::string encode_didl(const index::ResourceRecord& rec, std::span<const std::uint8_t> content,
                        std::uint64_t byvalue_threshold);

DidlDocument decode_didl(std::string_view xml);
DidlDocument decode_didl(const xml::XmlNode& didl_root);

struct MetadataFormat {
    std::string prefix;
    std::string schema;
    std::string ns;
};

/// oai_dc, http_header, oai_didl.
const std::vector<MetadataFormat>& supported_formats();
bool is_supported_format(std::string_view prefix);

}  // namespace oaifs::codecs
