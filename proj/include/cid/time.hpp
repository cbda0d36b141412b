#pragma once

#include <cstdint>
#include <string>

namespace cid {

// All timestamps are UTC seconds since the Unix epoch. Market semantics
// (CET trading days, DST) are an ingestion concern and never leak in here.
using TimePoint = std::int64_t;
using Duration = std::int64_t;

inline constexpr Duration kSecond = 1;
inline constexpr Duration kMinute = 60;
inline constexpr Duration kHour = 3600;
inline constexpr Duration kDay = 86400;
inline constexpr Duration kQuarterHour = 15 * kMinute;

struct CivilDate {
    int year = 1970;
    int month = 1;
    int day = 1;
};

struct CivilTime {
    CivilDate date;
    int hour = 0;
    int minute = 0;
    int second = 0;
};

// Days since 1970-01-01 for a proleptic Gregorian date (and back).
std::int64_t days_from_civil(const CivilDate& d);
CivilDate civil_from_days(std::int64_t days);

TimePoint time_from_civil(const CivilTime& t);
CivilTime civil_from_time(TimePoint t);

// "2024-04-15T10:30:00Z"; offsets like "+02:00" are converted to UTC.
TimePoint parse_rfc3339(const std::string& s);
std::string format_rfc3339(TimePoint t);

// "2024-04-15" -> midnight UTC.
TimePoint parse_date(const std::string& s);

// ISO 8601 week label, e.g. "2024-W16". Weeks start on Monday.
std::string iso_week_label(TimePoint t);

inline TimePoint floor_to(TimePoint t, Duration step) {
    TimePoint q = t / step;
    if (t < 0 && q * step != t) --q;
    return q * step;
}

inline bool is_aligned(TimePoint t, Duration step) { return floor_to(t, step) == t; }

}  // namespace cid
