#include "oaifs/util/time.hpp"

#include <cstdio>
#include <cstring>
#include <ctime>

namespace oaifs::util {

UtcSeconds now_utc() {
    return UtcSeconds{static_cast<std::int64_t>(::time(nullptr))};
}

std::string format_utc(UtcSeconds t) {
    std::time_t tt = static_cast<std::time_t>(t.value);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900, tm.tm_mon + 1,
                  tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

namespace {

bool all_digits(std::string_view s) {
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return !s.empty();
}

int days_in_month(int year, int month) {
    static const int days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2) {
        bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
        return leap ? 29 : 28;
    }
    return days[month - 1];
}

std::optional<std::int64_t> make_utc(int y, int mo, int d, int h, int mi, int s) {
    if (mo < 1 || mo > 12 || d < 1 || d > days_in_month(y, mo)) return std::nullopt;
    if (h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0 || s > 59) return std::nullopt;
    std::tm tm{};
    tm.tm_year = y - 1900;
    tm.tm_mon = mo - 1;
    tm.tm_mday = d;
    tm.tm_hour = h;
    tm.tm_min = mi;
    tm.tm_sec = s;
    return static_cast<std::int64_t>(timegm(&tm));
}

}  // namespace

std::optional<ParsedDatestamp> parse_datestamp(std::string_view s) {
    // YYYY-MM-DD
    if (s.size() == 10) {
        if (s[4] != '-' || s[7] != '-') return std::nullopt;
        if (!all_digits(s.substr(0, 4)) || !all_digits(s.substr(5, 2)) || !all_digits(s.substr(8, 2)))
            return std::nullopt;
        int y = std::stoi(std::string(s.substr(0, 4)));
        int mo = std::stoi(std::string(s.substr(5, 2)));
        int d = std::stoi(std::string(s.substr(8, 2)));
        auto start = make_utc(y, mo, d, 0, 0, 0);
        auto end = make_utc(y, mo, d, 23, 59, 59);
        if (!start || !end) return std::nullopt;
        return ParsedDatestamp{UtcSeconds{*start}, UtcSeconds{*end}, DateGranularity::date_only};
    }
    // YYYY-MM-DDThh:mm:ssZ
    if (s.size() == 20) {
        if (s[4] != '-' || s[7] != '-' || s[10] != 'T' || s[13] != ':' || s[16] != ':' || s[19] != 'Z')
            return std::nullopt;
        for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u, 11u, 12u, 14u, 15u, 17u, 18u})
            if (s[i] < '0' || s[i] > '9') return std::nullopt;
        int y = std::stoi(std::string(s.substr(0, 4)));
        int mo = std::stoi(std::string(s.substr(5, 2)));
        int d = std::stoi(std::string(s.substr(8, 2)));
        int h = std::stoi(std::string(s.substr(11, 2)));
        int mi = std::stoi(std::string(s.substr(14, 2)));
        int se = std::stoi(std::string(s.substr(17, 2)));
        auto t = make_utc(y, mo, d, h, mi, se);
        if (!t) return std::nullopt;
        return ParsedDatestamp{UtcSeconds{*t}, UtcSeconds{*t}, DateGranularity::seconds};
    }
    return std::nullopt;
}

std::string format_http_date(UtcSeconds t) {
    static const char* wd[] = {"Sun", "Mon", "Tue", "Wed", "Thu", "Fri", "Sat"};
    static const char* mon[] = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
    std::time_t tt = static_cast<std::time_t>(t.value);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%s, %02d %s %04d %02d:%02d:%02d GMT", wd[tm.tm_wday], tm.tm_mday,
                  mon[tm.tm_mon], tm.tm_year + 1900, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

std::optional<UtcSeconds> parse_http_date(std::string_view s) {
    std::tm tm{};
    std::string str(s);
    const char* end = strptime(str.c_str(), "%a, %d %b %Y %H:%M:%S GMT", &tm);
    if (end == nullptr || *end != '\0') {
        // tolerate the weekday being absent
        std::memset(&tm, 0, sizeof tm);
        end = strptime(str.c_str(), "%d %b %Y %H:%M:%S GMT", &tm);
        if (end == nullptr || *end != '\0') return std::nullopt;
    }
    return UtcSeconds{static_cast<std::int64_t>(timegm(&tm))};
}

}  // namespace oaifs::util
