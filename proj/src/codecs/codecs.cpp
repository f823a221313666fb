#include "oaifs/codecs/codecs.hpp"

#include "oaifs/util/base64.hpp"
#include "oaifs/util/digest.hpp"
#include "oaifs/xml/writer.hpp"

namespace oaifs::codecs {

HttpHeaderBlock header_block_for(const index::ResourceRecord& rec) {
    HttpHeaderBlock block;
    block.content_type = rec.media_type;
    block.content_length = rec.size_bytes;
    block.last_modified = rec.datestamp;
    block.server = std::string(kServerToken);
    block.digest = "sha-256=" + rec.digest;
    return block;
}

std::string encode_dc(const index::ResourceRecord& rec) {
    xml::XmlWriter w;
    w.open("oai_dc:dc", {{"xmlns:oai_dc", std::string(kOaiDcNamespace)},
                         {"xmlns:dc", std::string(kDcNamespace)},
                         {"xmlns:xsi", "http://www.w3.org/2001/XMLSchema-instance"},
                         {"xsi:schemaLocation",
                          "http://www.openarchives.org/OAI/2.0/oai_dc/ "
                          "http://www.openarchives.org/OAI/2.0/oai_dc.xsd"}});
    w.leaf("dc:identifier", rec.url);
    w.leaf("dc:date", util::format_utc(rec.datestamp));
    w.leaf("dc:format", rec.media_type);
    w.close();
    return w.take();
}

namespace {

void write_header_fields(xml::XmlWriter& w, const HttpHeaderBlock& block) {
    w.leaf("hh:contentType", block.content_type);
    w.leaf("hh:contentLength", std::to_string(block.content_length));
    w.leaf("hh:lastModified", util::format_utc(block.last_modified));
    w.leaf("hh:server", block.server);
    if (block.digest) w.leaf("hh:digest", *block.digest);
}

}  // namespace

std::string encode_http_header(const HttpHeaderBlock& block) {
    xml::XmlWriter w;
    w.open("hh:httpHeader", {{"xmlns:hh", std::string(kHttpHeaderNamespace)}});
    write_header_fields(w, block);
    w.close();
    return w.take();
}

std::string encode_http_header(const index::ResourceRecord& rec) {
    return encode_http_header(header_block_for(rec));
}

std::string encode_didl(const index::ResourceRecord& rec, std::span<const std::uint8_t> content,
                        std::uint64_t byvalue_threshold) {
    if (util::sha256_hex(content) != rec.digest)
        throw CodecError(CodecErrorKind::integrity,
                         "content does not match record digest for " + rec.url);

    xml::XmlWriter w;
    w.open("didl:DIDL", {{"xmlns:didl", std::string(kDidlNamespace)},
                         {"xmlns:dii", std::string(kDiiNamespace)},
                         {"xmlns:hh", std::string(kHttpHeaderNamespace)}});
    w.open("didl:Item");

    w.open("didl:Descriptor");
    w.open("didl:Statement", {{"mimeType", "application/xml"}});
    w.leaf("dii:Identifier", rec.url);
    w.close();
    w.close();

    w.open("didl:Descriptor");
    w.open("didl:Statement", {{"mimeType", "application/xml"}});
    w.open("hh:httpHeader");
    write_header_fields(w, header_block_for(rec));
    w.close();
    w.close();
    w.close();

    w.open("didl:Component");
    w.self_close("didl:Resource", {{"mimeType", rec.media_type}, {"ref", rec.url}});
    if (content.size() <= byvalue_threshold) {
        w.leaf("didl:Resource", util::base64_encode(content),
               {{"mimeType", rec.media_type}, {"encoding", "base64"}});
    }
    w.close();

    w.close();
    w.close();
    return w.take();
}

namespace {

HttpHeaderBlock parse_header_block(const xml::XmlNode& node) {
    HttpHeaderBlock block;
    const xml::XmlNode* ct = node.child("contentType");
    const xml::XmlNode* cl = node.child("contentLength");
    const xml::XmlNode* lm = node.child("lastModified");
    const xml::XmlNode* sv = node.child("server");
    const xml::XmlNode* dg = node.child("digest");
    if (!ct || !cl || !lm)
        throw CodecError(CodecErrorKind::structure, "http header descriptor is missing fields");
    block.content_type = ct->trimmed_text();
    try {
        block.content_length = std::stoull(cl->trimmed_text());
    } catch (const std::exception&) {
        throw CodecError(CodecErrorKind::structure, "contentLength is not a number");
    }
    auto parsed = util::parse_datestamp(lm->trimmed_text());
    if (!parsed) throw CodecError(CodecErrorKind::structure, "lastModified is not a datestamp");
    block.last_modified = parsed->start;
    if (sv) block.server = sv->trimmed_text();
    if (dg) block.digest = dg->trimmed_text();
    return block;
}

}  // namespace

DidlDocument decode_didl(const xml::XmlNode& root) {
    if (root.local_name() != "DIDL")
        throw CodecError(CodecErrorKind::structure, "root element is not DIDL");
    auto items = root.children_named("Item");
    if (items.size() != 1)
        throw CodecError(CodecErrorKind::structure, "expected exactly one top-level Item");
    const xml::XmlNode& item = *items.front();

    DidlDocument doc;
    bool have_identifier = false;
    bool have_headers = false;
    for (const xml::XmlNode* descriptor : item.children_named("Descriptor")) {
        const xml::XmlNode* statement = descriptor->child("Statement");
        if (!statement) continue;
        if (const xml::XmlNode* ident = statement->child("Identifier")) {
            doc.identifier = ident->trimmed_text();
            have_identifier = true;
        } else if (const xml::XmlNode* headers = statement->child("httpHeader")) {
            doc.headers = parse_header_block(*headers);
            have_headers = true;
        }
    }
    if (!have_identifier)
        throw CodecError(CodecErrorKind::structure, "missing DII identifier descriptor");
    if (!have_headers)
        throw CodecError(CodecErrorKind::structure, "missing http header descriptor");

    const xml::XmlNode* component = item.child("Component");
    if (!component) throw CodecError(CodecErrorKind::structure, "Item has no Component");

    bool have_ref = false;
    for (const xml::XmlNode* resource : component->children_named("Resource")) {
        const std::string* ref = resource->attr("ref");
        const std::string* encoding = resource->attr("encoding");
        const std::string* mime = resource->attr("mimeType");
        if (mime && doc.media_type.empty()) doc.media_type = *mime;
        if (ref) {
            doc.by_ref = *ref;
            have_ref = true;
        } else if (encoding && *encoding == "base64") {
            auto decoded = util::base64_decode(resource->text);
            if (!decoded)
                throw CodecError(CodecErrorKind::content, "by-value Resource is not valid base64");
            doc.by_value = std::move(*decoded);
        } else {
            throw CodecError(CodecErrorKind::structure,
                             "Resource carries neither ref nor base64 encoding");
        }
    }
    if (!have_ref)
        throw CodecError(CodecErrorKind::structure, "Component has no by-reference Resource");

    if (doc.by_value) {
        if (doc.by_value->size() != doc.headers.content_length)
            throw CodecError(CodecErrorKind::integrity,
                             "by-value length disagrees with declared content length");
        if (doc.headers.digest) {
            const std::string& declared = *doc.headers.digest;
            if (declared.rfind("sha-256=", 0) == 0) {
                std::string actual = util::sha256_hex(std::span<const std::uint8_t>(*doc.by_value));
                if (declared.substr(8) != actual)
                    throw CodecError(CodecErrorKind::integrity,
                                     "by-value content does not match declared digest");
            }
        }
    }
    return doc;
}

DidlDocument decode_didl(std::string_view xml_text) {
    xml::XmlNode root;
    try {
        root = xml::parse_document(xml_text);
    } catch (const xml::ParseError& e) {
        throw CodecError(CodecErrorKind::parse, e.what());
    }
    return decode_didl(root);
}

const std::vector<MetadataFormat>& supported_formats() {
    static const std::vector<MetadataFormat> formats = {
        {"oai_dc", "http://www.openarchives.org/OAI/2.0/oai_dc.xsd", std::string(kOaiDcNamespace)},
        {"http_header", std::string(kHttpHeaderNamespace), std::string(kHttpHeaderNamespace)},
        {"oai_didl",
         "http://standards.iso.org/ittf/PubliclyAvailableStandards/MPEG-21_schema_files/did/didl.xsd",
         std::string(kDidlNamespace)},
    };
    return formats;
}

bool is_supported_format(std::string_view prefix) {
    for (const auto& f : supported_formats())
        if (f.prefix == prefix) return true;
    return false;
}

}  // namespace oaifs::codecs
