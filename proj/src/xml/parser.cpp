#include "oaifs/xml/parser.hpp"

#include "oaifs/xml/writer.hpp"

namespace oaifs::xml {

std::string_view XmlNode::local_name() const {
    std::size_t colon = name.find(':');
    return colon == std::string::npos ? std::string_view(name)
                                      : std::string_view(name).substr(colon + 1);
}

const std::string* XmlNode::attr(std::string_view attr_name) const {
    for (const auto& [k, v] : attrs)
        if (k == attr_name) return &v;
    return nullptr;
}

const XmlNode* XmlNode::child(std::string_view local) const {
    for (const auto& c : children)
        if (c.local_name() == local) return &c;
    return nullptr;
}

std::vector<const XmlNode*> XmlNode::children_named(std::string_view local) const {
    std::vector<const XmlNode*> out;
    for (const auto& c : children)
        if (c.local_name() == local) out.push_back(&c);
    return out;
}

const XmlNode* XmlNode::find(std::string_view local) const {
    for (const auto& c : children) {
        if (c.local_name() == local) return &c;
        if (const XmlNode* hit = c.find(local)) return hit;
    }
    return nullptr;
}

std::string XmlNode::trimmed_text() const {
    std::size_t b = text.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = text.find_last_not_of(" \t\r\n");
    return text.substr(b, e - b + 1);
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view doc) : doc_(doc) {}

    XmlNode run() {
        skip_prolog_and_misc();
        if (eof() || peek() != '<') throw ParseError("expected root element");
        XmlNode root = parse_element();
        skip_misc();
        if (!eof()) throw ParseError("trailing content after root element");
        return root;
    }

private:
    bool eof() const { return pos_ >= doc_.size(); }
    char peek() const { return doc_[pos_]; }
    bool starts_with(std::string_view s) const { return doc_.substr(pos_, s.size()) == s; }

    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n')) ++pos_;
    }

    void skip_until(std::string_view terminator, const char* what) {
        std::size_t end = doc_.find(terminator, pos_);
        if (end == std::string_view::npos) throw ParseError(std::string("unterminated ") + what);
        pos_ = end + terminator.size();
    }

    void skip_prolog_and_misc() {
        skip_ws();
        if (starts_with("<?xml")) {
            pos_ += 5;
            skip_until("?>", "XML declaration");
        }
        skip_misc();
    }

    void skip_misc() {
        for (;;) {
            skip_ws();
            if (starts_with("<!--")) {
                pos_ += 4;
                skip_until("-->", "comment");
            } else if (starts_with("<!DOCTYPE")) {
                skip_until(">", "DOCTYPE");
            } else if (starts_with("<?")) {
                pos_ += 2;
                skip_until("?>", "processing instruction");
            } else {
                return;
            }
        }
    }

    static bool is_name_char(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == ':' || c == '_' || c == '-' || c == '.';
    }

    std::string parse_name() {
        std::size_t start = pos_;
        while (!eof() && is_name_char(peek())) ++pos_;
        if (pos_ == start) throw ParseError("expected name");
        return std::string(doc_.substr(start, pos_ - start));
    }

    std::string decode_entities(std::string_view raw) {
        std::string out;
        out.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != '&') {
                out += raw[i];
                continue;
            }
            std::size_t semi = raw.find(';', i);
            if (semi == std::string_view::npos) throw ParseError("unterminated entity reference");
            std::string_view ent = raw.substr(i + 1, semi - i - 1);
            if (ent == "lt")
                out += '<';
            else if (ent == "gt")
                out += '>';
            else if (ent == "amp")
                out += '&';
            else if (ent == "apos")
                out += '\'';
            else if (ent == "quot")
                out += '"';
            else if (!ent.empty() && ent[0] == '#') {
                int base = 10;
                std::string_view digits = ent.substr(1);
                if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
                    base = 16;
                    digits = digits.substr(1);
                }
                if (digits.empty()) throw ParseError("empty character reference");
                unsigned long code = 0;
                for (char c : digits) {
                    int v;
                    if (c >= '0' && c <= '9')
                        v = c - '0';
                    else if (base == 16 && c >= 'a' && c <= 'f')
                        v = c - 'a' + 10;
                    else if (base == 16 && c >= 'A' && c <= 'F')
                        v = c - 'A' + 10;
                    else
                        throw ParseError("bad character reference");
                    code = code * base + static_cast<unsigned long>(v);
                    if (code > 0x10FFFF) throw ParseError("character reference out of range");
                }
                append_utf8(out, static_cast<unsigned long>(code));
            } else {
                throw ParseError("unknown entity: " + std::string(ent));
            }
            i = semi;
        }
        return out;
    }

    static void append_utf8(std::string& out, unsigned long cp) {
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
    }

    void parse_attributes(XmlNode& node) {
        for (;;) {
            skip_ws();
            if (eof()) throw ParseError("unterminated start tag");
            if (peek() == '>' || peek() == '/') return;
            std::string name = parse_name();
            skip_ws();
            if (eof() || peek() != '=') throw ParseError("expected '=' after attribute name");
            ++pos_;
            skip_ws();
            if (eof() || (peek() != '"' && peek() != '\'')) throw ParseError("expected quoted attribute value");
            char quote = peek();
            ++pos_;
            std::size_t end = doc_.find(quote, pos_);
            if (end == std::string_view::npos) throw ParseError("unterminated attribute value");
            node.attrs.emplace_back(std::move(name), decode_entities(doc_.substr(pos_, end - pos_)));
            pos_ = end + 1;
        }
    }

    XmlNode parse_element() {
        // caller guarantees peek() == '<'
        ++pos_;
        XmlNode node;
        node.name = parse_name();
        parse_attributes(node);
        if (peek() == '/') {
            ++pos_;
            if (eof() || peek() != '>') throw ParseError("malformed empty-element tag");
            ++pos_;
            return node;
        }
        ++pos_;  // '>'
        parse_content(node);
        return node;
    }

    void parse_content(XmlNode& node) {
        for (;;) {
            std::size_t lt = doc_.find('<', pos_);
            if (lt == std::string_view::npos) throw ParseError("unterminated element: " + node.name);
            if (lt > pos_) node.text += decode_entities(doc_.substr(pos_, lt - pos_));
            pos_ = lt;
            if (starts_with("</")) {
                pos_ += 2;
                std::string closing = parse_name();
                if (closing != node.name)
                    throw ParseError("mismatched closing tag: " + closing + " vs " + node.name);
                skip_ws();
                if (eof() || peek() != '>') throw ParseError("malformed closing tag");
                ++pos_;
                return;
            }
            if (starts_with("<!--")) {
                pos_ += 4;
                skip_until("-->", "comment");
                continue;
            }
            if (starts_with("<![CDATA[")) {
                pos_ += 9;
                std::size_t end = doc_.find("]]>", pos_);
                if (end == std::string_view::npos) throw ParseError("unterminated CDATA section");
                node.text.append(doc_.substr(pos_, end - pos_));
                pos_ = end + 3;
                continue;
            }
            if (starts_with("<?")) {
                pos_ += 2;
                skip_until("?>", "processing instruction");
                continue;
            }
            node.children.push_back(parse_element());
        }
    }

    std::string_view doc_;
    std::size_t pos_ = 0;
};

void serialize_node(const XmlNode& node, XmlWriter& w) {
    AttrList attrs(node.attrs.begin(), node.attrs.end());
    if (node.children.empty()) {
        std::string t = node.trimmed_text();
        if (t.empty())
            w.self_close(node.name, attrs);
        else
            w.leaf(node.name, t, attrs);
        return;
    }
    w.open(node.name, attrs);
    for (const auto& c : node.children) serialize_node(c, w);
    w.close();
}

}  // namespace

XmlNode parse_document(std::string_view doc) {
    return Parser(doc).run();
}

std::string serialize(const XmlNode& node) {
    XmlWriter w(false);
    serialize_node(node, w);
    return w.take();
}

}  // namespace oaifs::xml
