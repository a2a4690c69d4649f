#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace hsx {

struct Hash128 {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    bool operator==(const Hash128&) const = default;
    auto operator<=>(const Hash128&) const = default;

    // 32 lowercase hex digits, hi word first.
    std::string hex() const;
};

// MurmurHash3 x64 128-bit variant with explicit little-endian loads so the
// digest is identical on every platform. Used for record ids, split
// fingerprints and feature hashing.
Hash128 murmur3_128(const void* data, std::size_t len, std::uint64_t seed);

inline Hash128 hash128(std::string_view s, std::uint64_t seed = 0) {
    return murmur3_128(s.data(), s.size(), seed);
}

inline std::uint64_t hash64(std::string_view s, std::uint64_t seed = 0) {
    return murmur3_128(s.data(), s.size(), seed).lo;
}

// Hashes a tuple of fields with length framing, so ("ab","c") and ("a","bc")
// cannot collide by concatenation.
Hash128 hash_fields(std::initializer_list<std::string_view> fields, std::uint64_t seed = 0);

}  // namespace hsx
