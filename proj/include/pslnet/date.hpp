#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace pslnet {

using Date = std::chrono::year_month_day;

// Parses "YYYY-MM-DD". Throws std::invalid_argument on malformed text or
// dates that do not exist in the calendar.
Date parse_date(std::string_view text);

std::optional<Date> try_parse_date(std::string_view text);

std::string format_date(const Date& d);

// Completed years between birth and as_of (birthday rule).
int age_in_years(const Date& birth, const Date& as_of);

// d shifted by n years; Feb 29 snaps to Feb 28 when the target year is
// not a leap year.
Date add_years(const Date& d, int n);

} // namespace pslnet
