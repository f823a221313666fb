#include "oaifs/service/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace oaifs::service {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string item =
            trim(comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start));
        if (!item.empty()) out.push_back(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config field '" + key + "': not an integer: " + value);
    }
}

}  // namespace

void ServiceConfig::validate() const {
    if (docroot.root_path.empty()) throw ConfigError("config field 'docroot': required");
    if (listen_address.empty()) throw ConfigError("config field 'listen_address': required");
    if (listen_address.find(':') == std::string::npos)
        throw ConfigError("config field 'listen_address': expected host:port");
    if (page_size_records < 1) throw ConfigError("config field 'page_size_records': must be >= 1");
    if (page_size_identifiers < 1)
        throw ConfigError("config field 'page_size_identifiers': must be >= 1");
    if (token_ttl_seconds <= 0) throw ConfigError("config field 'token_ttl': must be > 0");
    if (rescan_interval_seconds < 0)
        throw ConfigError("config field 'rescan_interval': must be >= 0");
    if (max_inflight < 0) throw ConfigError("config field 'max_inflight': must be >= 0");
    if (endpoint_path.empty() || endpoint_path.front() != '/')
        throw ConfigError("config field 'endpoint_path': must begin with '/'");
}

ServiceConfig parse_config(const std::string& text) {
    ServiceConfig cfg;
    cfg.docroot.excluded_extensions = index::DocRootConfig::default_excluded_extensions();
    cfg.docroot.excluded_path_patterns = index::DocRootConfig::default_excluded_patterns();
    bool patterns_set = false;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        if (key == "docroot") {
            cfg.docroot.root_path = value;
        } else if (key == "base_url") {
            cfg.docroot.base_url = value;
        } else if (key == "listen_address") {
            cfg.listen_address = value;
        } else if (key == "endpoint_path") {
            cfg.endpoint_path = value;
        } else if (key == "page_size_records") {
            std::int64_t v = parse_int(key, value);
            if (v < 1) throw ConfigError("config field 'page_size_records': must be >= 1");
            cfg.page_size_records = static_cast<std::size_t>(v);
        } else if (key == "page_size_identifiers") {
            std::int64_t v = parse_int(key, value);
            if (v < 1) throw ConfigError("config field 'page_size_identifiers': must be >= 1");
            cfg.page_size_identifiers = static_cast<std::size_t>(v);
        } else if (key == "byvalue_threshold") {
            std::int64_t v = parse_int(key, value);
            if (v < 0) throw ConfigError("config field 'byvalue_threshold': must be >= 0");
            cfg.byvalue_threshold = static_cast<std::uint64_t>(v);
        } else if (key == "token_ttl") {
            cfg.token_ttl_seconds = parse_int(key, value);
        } else if (key == "admin_email") {
            cfg.admin_email = value;
        } else if (key == "repository_name") {
            cfg.repository_name = value;
        } else if (key == "rescan_interval") {
            cfg.rescan_interval_seconds = parse_int(key, value);
        } else if (key == "access_log") {
            cfg.access_log_path = value;
        } else if (key == "max_inflight") {
            cfg.max_inflight = static_cast<int>(parse_int(key, value));
        } else if (key == "excluded_extensions") {
            cfg.docroot.excluded_extensions = split_list(value);
        } else if (key == "excluded_patterns") {
            cfg.docroot.excluded_path_patterns = split_list(value);
            patterns_set = true;
        } else if (key == "excluded_pattern") {
            // additive form, for patterns containing commas
            if (!patterns_set) {
                cfg.docroot.excluded_path_patterns.clear();
                patterns_set = true;
            }
            cfg.docroot.excluded_path_patterns.push_back(value);
        } else if (key == "alias") {
            std::size_t sp = value.find(' ');
            if (sp == std::string::npos)
                throw ConfigError("config field 'alias': expected '<url-prefix> <directory>'");
            cfg.docroot.alias_table.push_back({trim(value.substr(0, sp)), trim(value.substr(sp + 1))});
        } else {
            throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }

    if (cfg.docroot.base_url.empty() && !cfg.listen_address.empty())
        cfg.docroot.base_url = "http://" + cfg.listen_address;
    if (const char* env = std::getenv("OAIFS_LISTEN"); env && *env) cfg.listen_address = env;

    cfg.docroot.normalize();
    cfg.validate();
    return cfg;
}

ServiceConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string dump_config(const ServiceConfig& cfg) {
    std::ostringstream out;
    out << "docroot = " << cfg.docroot.root_path.string() << "\n";
    out << "base_url = " << cfg.docroot.base_url << "\n";
    out << "listen_address = " << cfg.listen_address << "\n";
    out << "endpoint_path = " << cfg.endpoint_path << "\n";
    out << "page_size_records = " << cfg.page_size_records << "\n";
    out << "page_size_identifiers = " << cfg.page_size_identifiers << "\n";
    out << "byvalue_threshold = " << cfg.byvalue_threshold << "\n";
    out << "token_ttl = " << cfg.token_ttl_seconds << "\n";
    out << "admin_email = " << cfg.admin_email << "\n";
    out << "repository_name = " << cfg.repository_name << "\n";
    out << "rescan_interval = " << cfg.rescan_interval_seconds << "\n";
    if (!cfg.access_log_path.empty()) out << "access_log = " << cfg.access_log_path << "\n";
    out << "max_inflight = " << cfg.max_inflight << "\n";
    std::string exts;
    for (const auto& e : cfg.docroot.excluded_extensions) {
        if (!exts.empty()) exts += ",";
        exts += e;
    }
    out << "excluded_extensions = " << exts << "\n";
    std::string pats;
    for (const auto& p : cfg.docroot.excluded_path_patterns) {
        if (!pats.empty()) pats += ",";
        pats += p;
    }
    out << "excluded_patterns = " << pats << "\n";
    for (const auto& a : cfg.docroot.alias_table)
        out << "alias = " << a.url_prefix << " " << a.directory << "\n";
    return out.str();
}

}  // namespace oaifs::service
