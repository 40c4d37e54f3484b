#include "tidecal/iso8601.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>

namespace tidecal {

namespace {

// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y += m <= 2;
}

bool read_fixed_uint(std::string_view s, std::size_t pos, std::size_t len, long& out) {
    if (pos + len > s.size()) return false;
    long v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) {
        const char c = s[i];
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = v;
    return true;
}

}  // namespace

bool parse_iso8601_utc(std::string_view text, double& epoch_seconds) {
    // YYYY-MM-DDThh:mm:ss[.frac](Z|+00:00|-00:00)
    long year, month, day, hour, minute, second;
    if (!read_fixed_uint(text, 0, 4, year)) return false;
    if (text.size() < 20 || text[4] != '-' || text[7] != '-') return false;
    if (!read_fixed_uint(text, 5, 2, month) || !read_fixed_uint(text, 8, 2, day)) return false;
    if (text[10] != 'T' && text[10] != ' ') return false;
    if (!read_fixed_uint(text, 11, 2, hour)) return false;
    if (text[13] != ':') return false;
    if (!read_fixed_uint(text, 14, 2, minute)) return false;
    if (text[16] != ':') return false;
    if (!read_fixed_uint(text, 17, 2, second)) return false;

    std::size_t pos = 19;
    double frac = 0.0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        double scale = 0.1;
        bool any = false;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            frac += (text[pos] - '0') * scale;
            scale *= 0.1;
            ++pos;
            any = true;
        }
        if (!any) return false;
    }
    // Only the UTC designator (or an explicit zero offset) is accepted.
    std::string_view rest = text.substr(pos);
    if (!(rest == "Z" || rest == "+00:00" || rest == "-00:00" || rest == "+0000")) return false;

    if (month < 1 || month > 12 || day < 1 || day > 31) return false;
    if (hour > 23 || minute > 59 || second > 60) return false;

    const std::int64_t days = days_from_civil(year, static_cast<unsigned>(month),
                                              static_cast<unsigned>(day));
    epoch_seconds = static_cast<double>(days) * 86400.0 + hour * 3600.0 + minute * 60.0 +
                    second + frac;
    return true;
}

std::string format_iso8601_utc(double epoch_seconds) {
    double whole = std::floor(epoch_seconds);
    double frac = epoch_seconds - whole;
    // Round the fraction to microseconds; carry into the integer part.
    long micros = std::lround(frac * 1e6);
    if (micros >= 1000000) {
        micros -= 1000000;
        whole += 1.0;
    }
    const std::int64_t total = static_cast<std::int64_t>(whole);
    std::int64_t days = total / 86400;
    std::int64_t rem = total % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    std::int64_t y;
    unsigned m, d;
    civil_from_days(days, y, m, d);
    const int hh = static_cast<int>(rem / 3600);
    const int mm = static_cast<int>((rem % 3600) / 60);
    const int ss = static_cast<int>(rem % 60);

    char buf[48];
    if (micros == 0) {
        std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02d:%02d:%02dZ",
                      static_cast<long long>(y), m, d, hh, mm, ss);
        return buf;
    }
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02d:%02d:%02d.%06ld",
                  static_cast<long long>(y), m, d, hh, mm, ss, micros);
    std::string s(buf);
    while (s.back() == '0') s.pop_back();
    s += 'Z';
    return s;
}

}  // namespace tidecal
