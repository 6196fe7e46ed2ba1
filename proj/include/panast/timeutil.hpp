#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace panast {

using Timestamp = std::chrono::sys_seconds;
using Date = std::chrono::sys_days;

/// Parses ISO-8601 UTC timestamps: "YYYY-MM-DDTHH:MM:SS" followed by "Z",
/// "+00:00", or nothing. A space may replace the 'T'. Fractional seconds are
/// truncated. Returns nullopt on anything else, including invalid dates.
std::optional<Timestamp> parse_timestamp(std::string_view text) noexcept;

/// Parses "YYYY-MM-DD".
std::optional<Date> parse_date(std::string_view text) noexcept;

std::string format_date(Date date);
std::string format_timestamp(Timestamp ts);

inline Date utc_day(Timestamp ts) noexcept { return std::chrono::floor<std::chrono::days>(ts); }

}  // namespace panast
