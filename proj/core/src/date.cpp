#include "ecnet/date.hpp"

#include <array>
#include <charconv>

#include "ecnet/errors.hpp"

namespace ecnet {

namespace {

bool is_leap_year(std::int32_t y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(std::int32_t year, unsigned month) {
    static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30,
                                                  31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap_year(year)) return 29;
    return kDays[month - 1];
}

int parse_component(std::string_view text, std::string_view what) {
    if (text.empty()) throw ParseError("empty date " + std::string(what));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("malformed date " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

}  // namespace

bool is_valid_date(const Date& d) {
    if (d.month < 1 || d.month > 12) return false;
    if (d.day < 1 || d.day > days_in_month(d.year, d.month)) return false;
    return true;
}

Date parse_date(std::string_view text) {
    const std::string original(text);
    std::array<std::string_view, 3> parts;
    std::size_t count = 0;
    while (!text.empty() && count < 3) {
        const auto slash = text.find('/');
        parts[count++] = text.substr(0, slash);
        if (slash == std::string_view::npos) {
            text = {};
        } else {
            text.remove_prefix(slash + 1);
            if (text.empty()) throw ParseError("trailing '/' in date");
        }
    }
    if (!text.empty()) throw ParseError("too many date components: '" + std::string(text) + "'");
    if (count == 0) throw ParseError("empty date");

    const int year = parse_component(parts[0], "year");
    const int month = count > 1 ? parse_component(parts[1], "month") : 1;
    const int day = count > 2 ? parse_component(parts[2], "day") : 1;
    if (month < 1 || month > 12 || day < 1 || day > 31)
        throw ParseError("impossible calendar date: '" + original + "'");

    const Date d{year, static_cast<std::uint8_t>(month), static_cast<std::uint8_t>(day)};
    if (!is_valid_date(d)) {
        throw ParseError("impossible calendar date: '" + format_date(d) + "'");
    }
    return d;
}

std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d/%02u/%02u", d.year, unsigned(d.month), unsigned(d.day));
    return buf;
}

}  // namespace ecnet
