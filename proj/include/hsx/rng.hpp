#pragma once

#include <cstdint>
#include <vector>

#include "hsx/hash.hpp"

namespace hsx {

// splitmix64: tiny, fast, and fully specified, so sampled splits and shuffles
// reproduce bit-for-bit on every platform (std::shuffle and the std
// distributions are implementation-defined and would not).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased value in [0, n) via rejection sampling.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = n == 0 ? 0 : (~std::uint64_t{0}) - (~std::uint64_t{0}) % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

template <typename T>
void fisher_yates_shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        using std::swap;
        swap(v[i - 1], v[j]);
    }
}

// Draws k distinct indices from [0, n) in selection order.
std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, SplitMix64& rng);

// Derives an independent stream from a seed and a purpose tag plus context
// fields, so concurrent consumers never share state.
inline SplitMix64 derive_stream(std::uint64_t seed, std::initializer_list<std::string_view> context) {
    Hash128 h = hash_fields(context, seed);
    return SplitMix64(h.hi ^ h.lo);
}

}  // namespace hsx
