#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hsx::utf8 {

// Replacement character emitted for malformed byte sequences.
inline constexpr std::uint32_t kReplacement = 0xFFFD;

// Decodes the code point starting at byte offset `i` and advances `i` past it.
// Malformed sequences consume one byte and decode as kReplacement, so decoding
// always terminates and is total over arbitrary byte strings.
inline std::uint32_t decode(std::string_view s, std::size_t& i) {
    const auto byte = [&](std::size_t k) { return static_cast<std::uint8_t>(s[k]); };
    const std::uint8_t b0 = byte(i);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    auto cont = [&](std::size_t k) {
        return k < s.size() && (byte(k) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
        std::uint32_t cp = (static_cast<std::uint32_t>(b0 & 0x1F) << 6) | (byte(i + 1) & 0x3F);
        i += 2;
        return cp < 0x80 ? kReplacement : cp;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
        std::uint32_t cp = (static_cast<std::uint32_t>(b0 & 0x0F) << 12)
                         | (static_cast<std::uint32_t>(byte(i + 1) & 0x3F) << 6)
                         | (byte(i + 2) & 0x3F);
        i += 3;
        if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) return kReplacement;
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
        std::uint32_t cp = (static_cast<std::uint32_t>(b0 & 0x07) << 18)
                         | (static_cast<std::uint32_t>(byte(i + 1) & 0x3F) << 12)
                         | (static_cast<std::uint32_t>(byte(i + 2) & 0x3F) << 6)
                         | (byte(i + 3) & 0x3F);
        i += 4;
        if (cp < 0x10000 || cp > 0x10FFFF) return kReplacement;
        return cp;
    }
    ++i;
    return kReplacement;
}

inline void encode(std::uint32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::vector<std::uint32_t> code_points(std::string_view s) {
    std::vector<std::uint32_t> cps;
    cps.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) cps.push_back(decode(s, i));
    return cps;
}

inline std::size_t count_code_points(std::string_view s) {
    std::size_t n = 0, i = 0;
    while (i < s.size()) {
        decode(s, i);
        ++n;
    }
    return n;
}

// Unicode whitespace (the common set; enough for social-media text).
inline bool is_space(std::uint32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
        case 0x85: case 0xA0: case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

inline bool is_ascii_alnum(std::uint32_t cp) {
    return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
}

// General punctuation beyond ASCII that shows up in scraped comments.
inline bool is_punct(std::uint32_t cp) {
    if (cp < 0x80) return cp > 0x20 && !is_ascii_alnum(cp);
    switch (cp) {
        case 0xA1:   // inverted exclamation
        case 0xBF:   // inverted question
        case 0xAB: case 0xBB:       // guillemets
        case 0xB7:   // middle dot
        case 0x2022: // bullet
        case 0x2030: // per mille
        case 0x2039: case 0x203A:   // single guillemets
            return true;
        default:
            // dashes, quotes, ellipsis, daggers (U+2010..U+2027)
            return cp >= 0x2010 && cp <= 0x2027;
    }
}

// Word constituents: ASCII alphanumerics plus any non-space, non-punctuation
// code point above ASCII (umlauts, eszett, emoji, other scripts).
inline bool is_word(std::uint32_t cp) {
    if (cp < 0x80) return is_ascii_alnum(cp);
    return !is_space(cp) && !is_punct(cp);
}

// Case folding for ASCII and the Latin-1 letters (covers English and German).
inline std::uint32_t to_lower(std::uint32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    if (cp == 0x1E9E) return 0xDF;  // capital eszett
    return cp;
}

inline std::string lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) encode(to_lower(decode(s, i)), out);
    return out;
}

}  // namespace hsx::utf8
