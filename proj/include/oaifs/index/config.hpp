#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace oaifs::index {

struct AliasEntry {
    std::string url_prefix;  // "/A"
    std::string directory;   // filesystem path the alias would map to
};

/// Inputs of the file-to-URL direction: which tree to expose, under which
/// URL prefix, and what to leave out.
struct DocRootConfig {
    std::filesystem::path root_path;
    std::string base_url;                              // no trailing slash after normalize()
    std::vector<std::string> excluded_extensions;      // lowercase, leading '.'
    std::vector<std::string> excluded_path_patterns;   // globs over rel_path
    std::vector<AliasEntry> alias_table;

    /// Enforces the field invariants (trailing-slash strip, lowercase
    /// dotted extensions). Call after filling fields by hand.
    void normalize();

    /// Dynamic-content extensions plus the OAI endpoint's URL space.
    static std::vector<std::string> default_excluded_extensions();
    static std::vector<std::string> default_excluded_patterns();
};

}  // namespace oaifs::index
