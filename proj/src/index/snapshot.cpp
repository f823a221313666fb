#include "oaifs/index/snapshot.hpp"

#include <sys/stat.h>

#include <algorithm>
#include <set>

#include "oaifs/index/media_types.hpp"
#include "oaifs/util/digest.hpp"
#include "oaifs/util/glob.hpp"
#include "oaifs/util/url.hpp"

namespace oaifs::index {

namespace fs = std::filesystem;

RepositorySnapshot::RepositorySnapshot(std::vector<ResourceRecord> records, util::UtcSeconds created_at)
    : records_(std::move(records)), created_at_(created_at) {
    std::sort(records_.begin(), records_.end(), [](const ResourceRecord& a, const ResourceRecord& b) {
        if (a.datestamp != b.datestamp) return a.datestamp < b.datestamp;
        return a.url < b.url;
    });

    earliest_ = util::kEpochSentinel;
    if (!records_.empty()) {
        earliest_ = records_.front().datestamp;  // sorted, so front is the minimum
    }

    std::string id_material;
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const ResourceRecord& r = records_[i];
        id_material += r.url;
        id_material += '\n';
        id_material += util::format_utc(r.datestamp);
        id_material += '\n';
        id_material += std::to_string(r.size_bytes);
        id_material += '\n';

        url_index_.emplace(r.url, i);

        // index the record under its leaf set and every ancestor
        std::string spec = r.set_spec;
        for (;;) {
            set_index_[spec].push_back(i);
            std::size_t colon = spec.rfind(':');
            if (colon == std::string::npos) break;
            spec.resize(colon);
        }
    }
    snapshot_id_ = util::sha256_hex(id_material);
}

const ResourceRecord* RepositorySnapshot::find_by_url(const std::string& url) const {
    auto it = url_index_.find(url);
    return it == url_index_.end() ? nullptr : &records_[it->second];
}

namespace {

bool has_excluded_extension(const std::string& rel_path, const std::vector<std::string>& extensions) {
    std::size_t dot = rel_path.find_last_of('.');
    std::size_t slash = rel_path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return false;
    std::string ext = rel_path.substr(dot);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return std::find(extensions.begin(), extensions.end(), ext) != extensions.end();
}

bool matches_excluded_pattern(const std::string& rel_path, const std::vector<std::string>& patterns) {
    for (const auto& pat : patterns)
        if (util::glob_match(pat, rel_path)) return true;
    return false;
}

bool alias_shadows(const std::string& url_path, const std::vector<AliasEntry>& aliases) {
    for (const auto& alias : aliases) {
        const std::string& p = alias.url_prefix;
        if (url_path == p) return true;
        if (url_path.size() > p.size() && url_path.compare(0, p.size(), p) == 0 &&
            url_path[p.size()] == '/')
            return true;
    }
    return false;
}

struct ScanContext {
    const DocRootConfig& cfg;
    fs::path canonical_root;
    std::vector<ResourceRecord> records;
    std::vector<std::string>* warnings;
    std::set<fs::path> visited_dirs;  // canonical paths, symlink loop guard

    void warn(const std::string& msg) {
        if (warnings) warnings->push_back(msg);
    }
};

bool inside_root(const fs::path& canonical, const fs::path& canonical_root) {
    auto root_it = canonical_root.begin();
    auto it = canonical.begin();
    for (; root_it != canonical_root.end(); ++root_it, ++it) {
        if (it == canonical.end() || *it != *root_it) return false;
    }
    return true;
}

void scan_dir(ScanContext& ctx, const fs::path& dir, const std::string& rel_prefix) {
    std::error_code ec;
    std::vector<fs::directory_entry> entries;
    for (fs::directory_iterator it(dir, ec), end; it != end; it.increment(ec)) {
        if (ec) {
            ctx.warn("cannot iterate " + dir.string() + ": " + ec.message());
            return;
        }
        entries.push_back(*it);
    }
    if (ec) {
        ctx.warn("cannot open " + dir.string() + ": " + ec.message());
        return;
    }
    std::sort(entries.begin(), entries.end(),
              [](const fs::directory_entry& a, const fs::directory_entry& b) {
                  return a.path().filename() < b.path().filename();
              });

    for (const auto& entry : entries) {
        std::string name = entry.path().filename().string();
        if (name.empty() || name.front() == '.') continue;  // hidden entries stay out
        std::string rel = rel_prefix.empty() ? name : rel_prefix + "/" + name;

        fs::file_status st = entry.symlink_status(ec);
        if (ec) {
            ctx.warn("cannot stat " + rel + ": " + ec.message());
            continue;
        }

        fs::path target = entry.path();
        if (fs::is_symlink(st)) {
            fs::path canon = fs::canonical(entry.path(), ec);
            if (ec) {
                ctx.warn("dangling symlink skipped: " + rel);
                continue;
            }
            if (!inside_root(canon, ctx.canonical_root)) continue;  // escapes the root
            target = canon;
        }

        fs::file_status tst = fs::status(target, ec);
        if (ec) {
            ctx.warn("cannot stat " + rel + ": " + ec.message());
            continue;
        }

        if (fs::is_directory(tst)) {
            fs::path canon = fs::is_symlink(st) ? target : fs::canonical(entry.path(), ec);
            if (ec) {
                ctx.warn("cannot resolve " + rel + ": " + ec.message());
                continue;
            }
            if (!ctx.visited_dirs.insert(canon).second) continue;  // loop
            scan_dir(ctx, entry.path(), rel);
            continue;
        }
        if (!fs::is_regular_file(tst)) continue;

        if (has_excluded_extension(rel, ctx.cfg.excluded_extensions)) continue;
        if (matches_excluded_pattern(rel, ctx.cfg.excluded_path_patterns)) continue;

        struct ::stat sb{};
        if (::stat(target.c_str(), &sb) != 0) {
            ctx.warn("cannot stat " + rel);
            continue;
        }
        auto digest = util::sha256_hex_file(target);
        if (!digest) {
            ctx.warn("unreadable file skipped: " + rel);
            continue;
        }

        ResourceRecord rec;
        rec.rel_path = rel;
        std::string url_path = "/" + util::percent_encode_path(rel);
        rec.url = ctx.cfg.base_url + url_path;
        rec.datestamp = util::UtcSeconds{static_cast<std::int64_t>(sb.st_mtime)};
        rec.media_type = media_type_of(rel);
        rec.size_bytes = static_cast<std::uint64_t>(sb.st_size);
        rec.digest = *digest;
        rec.set_spec = set_spec_of(rec.media_type);
        rec.shadowed = alias_shadows(url_path, ctx.cfg.alias_table);
        ctx.records.push_back(std::move(rec));
    }
}

}  // namespace

RepositorySnapshot scan(const DocRootConfig& config, std::vector<std::string>* warnings) {
    std::error_code ec;
    if (!fs::is_directory(config.root_path, ec) || ec)
        throw ScanError("document root is not a readable directory: " + config.root_path.string());
    fs::path canonical_root = fs::canonical(config.root_path, ec);
    if (ec) throw ScanError("cannot resolve document root: " + config.root_path.string());

    ScanContext ctx{config, canonical_root, {}, warnings, {}};
    ctx.visited_dirs.insert(canonical_root);
    scan_dir(ctx, config.root_path, "");

    // a duplicate URL means two files collide in URL space; keep the first,
    // shadow the rest
    std::set<std::string> seen;
    for (auto& rec : ctx.records) {
        if (!seen.insert(rec.url).second) rec.shadowed = true;
    }

    return RepositorySnapshot(std::move(ctx.records), util::now_utc());
}

std::vector<ResourceRecord> filter_records(const RepositorySnapshot& snap,
                                           std::optional<util::UtcSeconds> from,
                                           std::optional<util::UtcSeconds> until,
                                           const std::optional<std::string>& set) {
    std::vector<ResourceRecord> out;
    for (const auto& rec : snap.records()) {
        if (from && rec.datestamp < *from) continue;
        if (until && rec.datestamp > *until) continue;
        if (set && !in_set(rec, *set)) continue;
        out.push_back(rec);
    }
    return out;
}

bool in_set(const ResourceRecord& rec, const std::string& set) {
    if (rec.set_spec == set) return true;
    return rec.set_spec.size() > set.size() && rec.set_spec.compare(0, set.size(), set) == 0 &&
           rec.set_spec[set.size()] == ':';
}

}  // namespace oaifs::index
