#include "cid/time.hpp"

#include <cstdio>
#include <stdexcept>

namespace cid {

// Howard Hinnant's civil date algorithms.
std::int64_t days_from_civil(const CivilDate& d) {
    std::int64_t y = d.year;
    const int m = d.month;
    const int day = d.day;
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + day - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return CivilDate{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

TimePoint time_from_civil(const CivilTime& t) {
    return days_from_civil(t.date) * kDay + t.hour * kHour + t.minute * kMinute + t.second;
}

CivilTime civil_from_time(TimePoint t) {
    std::int64_t days = t / kDay;
    std::int64_t rem = t - days * kDay;
    if (rem < 0) {
        rem += kDay;
        --days;
    }
    CivilTime out;
    out.date = civil_from_days(days);
    out.hour = static_cast<int>(rem / kHour);
    out.minute = static_cast<int>((rem % kHour) / kMinute);
    out.second = static_cast<int>(rem % kMinute);
    return out;
}

namespace {

[[noreturn]] void bad_time(const std::string& s) {
    throw std::invalid_argument("invalid timestamp: '" + s + "'");
}

int parse_int(const std::string& s, size_t pos, size_t len) {
    int v = 0;
    for (size_t i = pos; i < pos + len; ++i) {
        if (i >= s.size() || s[i] < '0' || s[i] > '9') bad_time(s);
        v = v * 10 + (s[i] - '0');
    }
    return v;
}

bool valid_date(const CivilDate& d) {
    if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31) return false;
    return civil_from_days(days_from_civil(d)).day == d.day;
}

}  // namespace

TimePoint parse_rfc3339(const std::string& s) {
    // YYYY-MM-DDTHH:MM:SS followed by Z or +HH:MM / -HH:MM.
    if (s.size() < 20 || s[4] != '-' || s[7] != '-' || (s[10] != 'T' && s[10] != 't') ||
        s[13] != ':' || s[16] != ':')
        bad_time(s);
    CivilTime ct;
    ct.date.year = parse_int(s, 0, 4);
    ct.date.month = parse_int(s, 5, 2);
    ct.date.day = parse_int(s, 8, 2);
    ct.hour = parse_int(s, 11, 2);
    ct.minute = parse_int(s, 14, 2);
    ct.second = parse_int(s, 17, 2);
    if (!valid_date(ct.date) || ct.hour > 23 || ct.minute > 59 || ct.second > 60) bad_time(s);
    size_t pos = 19;
    Duration offset = 0;
    if (s[pos] == 'Z' || s[pos] == 'z') {
        ++pos;
    } else if (s[pos] == '+' || s[pos] == '-') {
        if (s.size() < pos + 6 || s[pos + 3] != ':') bad_time(s);
        const int oh = parse_int(s, pos + 1, 2);
        const int om = parse_int(s, pos + 4, 2);
        offset = (oh * kHour + om * kMinute) * (s[pos] == '+' ? 1 : -1);
        pos += 6;
    } else {
        bad_time(s);
    }
    if (pos != s.size()) bad_time(s);
    return time_from_civil(ct) - offset;
}

std::string format_rfc3339(TimePoint t) {
    const CivilTime ct = civil_from_time(t);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", ct.date.year, ct.date.month,
                  ct.date.day, ct.hour, ct.minute, ct.second);
    return buf;
}

TimePoint parse_date(const std::string& s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') bad_time(s);
    CivilDate d;
    d.year = parse_int(s, 0, 4);
    d.month = parse_int(s, 5, 2);
    d.day = parse_int(s, 8, 2);
    if (!valid_date(d)) bad_time(s);
    return days_from_civil(d) * kDay;
}

std::string iso_week_label(TimePoint t) {
    const std::int64_t days = (t >= 0 ? t / kDay : (t - kDay + 1) / kDay);
    // 1970-01-01 was a Thursday; ISO weekday Mon=0..Sun=6.
    const int weekday = static_cast<int>(((days % 7) + 7 + 3) % 7);
    // The ISO week of a date is the week of its Thursday.
    const std::int64_t thursday = days + (3 - weekday);
    const CivilDate th = civil_from_days(thursday);
    const std::int64_t jan1 = days_from_civil(CivilDate{th.year, 1, 1});
    const int week = static_cast<int>((thursday - jan1) / 7) + 1;
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-W%02d", th.year, week);
    return buf;
}

}  // namespace cid
