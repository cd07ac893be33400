#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pvdb {

/// Renders unix seconds as `YYYY-MM-DDTHH:MM:SSZ` (UTC, no fractional part).
std::string format_rfc3339(std::int64_t unix_seconds);

/// Parses the exact shape produced by format_rfc3339. Throws Error(format).
std::int64_t parse_rfc3339(std::string_view text);

/// Filesystem-friendly variant: `YYYYMMDDTHHMMSSZ`.
std::string format_compact_utc(std::int64_t unix_seconds);

}  // namespace pvdb
