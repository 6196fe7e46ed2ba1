#include "panast/timeutil.hpp"

#include <fmt/format.h>

namespace panast {
namespace {

bool read_digits(std::string_view s, std::size_t pos, std::size_t count, int& out) {
    if (pos + count > s.size()) return false;
    int value = 0;
    for (std::size_t i = pos; i < pos + count; ++i) {
        const char c = s[i];
        if (c < '0' || c > '9') return false;
        value = value * 10 + (c - '0');
    }
    out = value;
    return true;
}

std::optional<Date> parse_date_prefix(std::string_view s) {
    int y = 0, mo = 0, d = 0;
    if (s.size() < 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    if (!read_digits(s, 0, 4, y) || !read_digits(s, 5, 2, mo) || !read_digits(s, 8, 2, d))
        return std::nullopt;
    const std::chrono::year_month_day ymd{std::chrono::year{y},
                                          std::chrono::month{static_cast<unsigned>(mo)},
                                          std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) return std::nullopt;
    return Date{ymd};
}

}  // namespace

std::optional<Date> parse_date(std::string_view text) noexcept {
    if (text.size() != 10) return std::nullopt;
    return parse_date_prefix(text);
}

std::optional<Timestamp> parse_timestamp(std::string_view s) noexcept {
    const auto date = parse_date_prefix(s);
    if (!date || s.size() < 19) return std::nullopt;
    if (s[10] != 'T' && s[10] != 't' && s[10] != ' ') return std::nullopt;
    int h = 0, mi = 0, sec = 0;
    if (s[13] != ':' || s[16] != ':') return std::nullopt;
    if (!read_digits(s, 11, 2, h) || !read_digits(s, 14, 2, mi) || !read_digits(s, 17, 2, sec))
        return std::nullopt;
    if (h > 23 || mi > 59 || sec > 60) return std::nullopt;

    std::size_t pos = 19;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        const std::size_t digits_start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == digits_start) return std::nullopt;
    }
    const std::string_view zone = s.substr(pos);
    if (!(zone.empty() || zone == "Z" || zone == "z" || zone == "+00:00" || zone == "+0000"))
        return std::nullopt;

    using namespace std::chrono;
    return Timestamp{*date} + hours{h} + minutes{mi} + seconds{sec};
}

std::string format_date(Date date) {
    const std::chrono::year_month_day ymd{date};
    return fmt::format("{:04d}-{:02d}-{:02d}", static_cast<int>(ymd.year()),
                       static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
}

std::string format_timestamp(Timestamp ts) {
    const Date day = utc_day(ts);
    const auto secs = (ts - Timestamp{day}).count();
    return fmt::format("{}T{:02d}:{:02d}:{:02d}Z", format_date(day), secs / 3600, (secs / 60) % 60,
                       secs % 60);
}

}  // namespace panast
