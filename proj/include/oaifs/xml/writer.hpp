#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oaifs::xml {

std::string escape_text(std::string_view s);
std::string escape_attr(std::string_view s);

using AttrList = std::vector<std::pair<std::string, std::string>>;

/// Small deterministic XML serializer. Attributes render in the order
/// given; elements with children indent two spaces, text-only elements
/// stay on one line. Output for equal input is byte-identical.
class XmlWriter {
public:
    /// declaration=true emits the <?xml version="1.0" encoding="UTF-8"?> prolog.
    explicit XmlWriter(bool declaration = false);

    void open(std::string_view name, const AttrList& attrs = {});
    void close();
    /// <name attrs>escaped text</name>
    void leaf(std::string_view name, std::string_view text, const AttrList& attrs = {});
    /// <name attrs/>
    void self_close(std::string_view name, const AttrList& attrs = {});
    /// Inserts a pre-serialized fragment as a child, re-indented lines and all.
    void raw(std::string_view fragment);

    std::string take();

private:
    void begin_child();
    void indent();

    std::string buf_;
    std::vector<std::string> open_elements_;
    std::vector<bool> has_children_;
};

}  // namespace oaifs::xml
