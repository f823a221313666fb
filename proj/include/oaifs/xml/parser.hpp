#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oaifs::xml {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One element. Character data directly inside the element is concatenated
/// into `text` (entity-decoded); element children keep document order.
struct XmlNode {
    std::string name;  // as written, prefix included
    std::vector<std::pair<std::string, std::string>> attrs;
    std::vector<XmlNode> children;
    std::string text;

    std::string_view local_name() const;
    const std::string* attr(std::string_view name) const;
    const XmlNode* child(std::string_view local) const;             // first match by local name
    std::vector<const XmlNode*> children_named(std::string_view local) const;
    /// Depth-first search for a descendant by local name.
    const XmlNode* find(std::string_view local) const;
    /// `text` with surrounding whitespace removed.
    std::string trimmed_text() const;
};

/// Parses a complete document, returns the root element. Throws ParseError.
XmlNode parse_document(std::string_view doc);

/// Re-serializes a parsed subtree (used to carry opaque metadata through).
std::string serialize(const XmlNode& node);

}  // namespace oaifs::xml
