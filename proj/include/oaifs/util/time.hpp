#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace oaifs::util {

/// UTC timestamp with second granularity (the only granularity this
/// project uses anywhere: datestamps, tokens, Last-Modified).
struct UtcSeconds {
    std::int64_t value = 0;

    auto operator<=>(const UtcSeconds&) const = default;
};

inline constexpr UtcSeconds kEpochSentinel{0};  // 1970-01-01T00:00:00Z

UtcSeconds now_utc();

/// "YYYY-MM-DDThh:mm:ssZ"
std::string format_utc(UtcSeconds t);

enum class DateGranularity { date_only, seconds };

struct ParsedDatestamp {
    UtcSeconds start;   // widened to T00:00:00Z for date-only values
    UtcSeconds end;     // widened to T23:59:59Z for date-only values
    DateGranularity granularity = DateGranularity::seconds;
};

/// Accepts "YYYY-MM-DD" and "YYYY-MM-DDThh:mm:ssZ", rejects anything else
/// (including out-of-range fields and missing trailing Z).
std::optional<ParsedDatestamp> parse_datestamp(std::string_view s);

/// RFC 1123 date for HTTP headers: "Sun, 06 Nov 1994 08:49:37 GMT".
std::string format_http_date(UtcSeconds t);
std::optional<UtcSeconds> parse_http_date(std::string_view s);

}  // namespace oaifs::util
