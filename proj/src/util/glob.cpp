#include "oaifs/util/glob.hpp"

namespace oaifs::util {

namespace {

bool match_from(std::string_view pat, std::size_t pi, std::string_view path, std::size_t si) {
    while (pi < pat.size()) {
        char pc = pat[pi];
        if (pc == '*') {
            bool double_star = pi + 1 < pat.size() && pat[pi + 1] == '*';
            std::size_t next = pi + (double_star ? 2 : 1);
            // greedy would do; recursive backtracking keeps it obvious
            for (std::size_t k = si; k <= path.size(); ++k) {
                if (match_from(pat, next, path, k)) return true;
                if (k < path.size() && !double_star && path[k] == '/') break;
            }
            return false;
        }
        if (si >= path.size()) return false;
        if (pc == '?') {
            if (path[si] == '/') return false;
        } else if (pc != path[si]) {
            return false;
        }
        ++pi;
        ++si;
    }
    return si == path.size();
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view path) {
    return match_from(pattern, 0, path, 0);
}

}  // namespace oaifs::util
