#include "oaifs/xml/writer.hpp"

namespace oaifs::xml {

std::string escape_text(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string escape_attr(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

namespace {

void append_attrs(std::string& buf, const AttrList& attrs) {
    for (const auto& [k, v] : attrs) {
        buf += ' ';
        buf += k;
        buf += "=\"";
        buf += escape_attr(v);
        buf += '"';
    }
}

}  // namespace

XmlWriter::XmlWriter(bool declaration) {
    if (declaration) buf_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
}

void XmlWriter::indent() {
    buf_.append(open_elements_.size() * 2, ' ');
}

void XmlWriter::begin_child() {
    if (!open_elements_.empty()) {
        if (!has_children_.back()) {
            buf_ += '\n';
            has_children_.back() = true;
        }
    }
}

void XmlWriter::open(std::string_view name, const AttrList& attrs) {
    begin_child();
    indent();
    buf_ += '<';
    buf_ += name;
    append_attrs(buf_, attrs);
    buf_ += '>';
    open_elements_.emplace_back(name);
    has_children_.push_back(false);
}

void XmlWriter::close() {
    std::string name = open_elements_.back();
    bool had_children = has_children_.back();
    open_elements_.pop_back();
    has_children_.pop_back();
    if (had_children) indent();
    buf_ += "</";
    buf_ += name;
    buf_ += ">\n";
}

void XmlWriter::leaf(std::string_view name, std::string_view text, const AttrList& attrs) {
    begin_child();
    indent();
    buf_ += '<';
    buf_ += name;
    append_attrs(buf_, attrs);
    buf_ += '>';
    buf_ += escape_text(text);
    buf_ += "</";
    buf_ += name;
    buf_ += ">\n";
}

void XmlWriter::self_close(std::string_view name, const AttrList& attrs) {
    begin_child();
    indent();
    buf_ += '<';
    buf_ += name;
    append_attrs(buf_, attrs);
    buf_ += "/>\n";
}

void XmlWriter::raw(std::string_view fragment) {
    begin_child();
    std::string prefix(open_elements_.size() * 2, ' ');
    std::size_t start = 0;
    while (start < fragment.size()) {
        std::size_t nl = fragment.find('\n', start);
        std::string_view line =
            nl == std::string_view::npos ? fragment.substr(start) : fragment.substr(start, nl - start);
        if (!line.empty()) {
            buf_ += prefix;
            buf_ += line;
        }
        buf_ += '\n';
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
}

std::string XmlWriter::take() {
    return std::move(buf_);
}

}  // namespace oaifs::xml
