#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "hsx/common.hpp"

namespace hsx {

// Shortest round-trip decimal form, locale independent.
inline std::string format_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

// Two decimals, half rounded away from zero. The relative nudge makes decimal
// halves that sit just below .xx5 in binary (0.555 stores as 0.55499...)
// round the way the decimal literal reads; genuinely smaller values are more
// than 1e-12 away and are unaffected.
inline std::string format_2dp(double v) {
    const double mag = std::abs(v) * 100.0 * (1.0 + 1e-12);
    long long cents = static_cast<long long>(std::floor(mag + 0.5));
    if (v < 0) cents = -cents;
    std::string out = cents < 0 ? "-" : "";
    long long a = cents < 0 ? -cents : cents;
    out += std::to_string(a / 100);
    out += '.';
    out += static_cast<char>('0' + (a / 10) % 10);
    out += static_cast<char>('0' + a % 10);
    return out;
}

// Two decimals, truncated toward zero. Used for the percent column of the
// dataset overview table.
inline std::string format_2dp_trunc(double v) {
    const double mag = std::abs(v) * 100.0 * (1.0 + 1e-12);
    long long cents = static_cast<long long>(std::floor(mag));
    std::string out = v < 0 && cents != 0 ? "-" : "";
    out += std::to_string(cents / 100);
    out += '.';
    out += static_cast<char>('0' + (cents / 10) % 10);
    out += static_cast<char>('0' + cents % 10);
    return out;
}

inline double parse_double(std::string_view s, std::string_view what) {
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
        throw Error("invalid number for " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return v;
}

inline std::int64_t parse_int(std::string_view s, std::string_view what) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
        throw Error("invalid integer for " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace hsx
