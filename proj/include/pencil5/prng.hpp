#ifndef PENCIL5_PRNG_HPP
#define PENCIL5_PRNG_HPP

#include <cstdint>
#include <string_view>

namespace pencil5 {

/// pencil5-prng-v1: xoshiro256** seeded through splitmix64, with independent
/// streams derived from a (seed, tag) pair via FNV-1a. Integer-only state, so
/// every draw is bit-identical across platforms. Used wherever a model needs
/// "generic" small coefficients; reports stay reproducible from the seed.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::string_view tag) {
        std::uint64_t x = seed ^ (fnv1a(tag) * 0x9E3779B97F4A7C15ULL);
        for (auto& w : s_) w = splitmix64(x);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform draw in [lo, hi], inclusive. lo <= hi required.
    long long draw_int(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

    static std::uint64_t fnv1a(std::string_view s) {
        std::uint64_t h = 14695981039346656037ULL;
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        return h;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t s_[4];
};

} // namespace pencil5

#endif
