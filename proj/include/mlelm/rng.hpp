#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace mlelm::rng {

// FNV-1a over the tag bytes.
inline std::uint64_t hash_tag(std::string_view tag) noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// splitmix64 finalizer; decorrelates nearby seeds.
inline std::uint64_t mix(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// One generator per (seed, purpose tag). Streams with distinct tags never
// share draws, so a new consumer cannot shift the sequences of existing ones.
inline std::mt19937_64 derive_stream(std::uint64_t seed, std::string_view tag) {
    return std::mt19937_64(mix(seed ^ hash_tag(tag)));
}

// Uniform on [0, 1) from the top 53 bits. std::uniform_real_distribution is
// implementation-defined; this mapping is identical on every platform.
inline double next_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double next_in(std::mt19937_64& gen, double low, double high) {
    return low + (high - low) * next_unit(gen);
}

}  // namespace mlelm::rng
