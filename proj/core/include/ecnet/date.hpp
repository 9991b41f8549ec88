#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ecnet {

// Calendar date; default comparison order is chronological.
struct Date {
    std::int32_t year = 0;
    std::uint8_t month = 1;
    std::uint8_t day = 1;

    friend auto operator<=>(const Date&, const Date&) = default;
};

bool is_valid_date(const Date& d);

// Accepts "YYYY/MM/DD", "YYYY/MM" or "YYYY"; a missing month or day defaults
// to 1. Throws ParseError on malformed input or an impossible calendar date.
Date parse_date(std::string_view text);

// Always "YYYY/MM/DD", zero padded.
std::string format_date(const Date& d);

}  // namespace ecnet
