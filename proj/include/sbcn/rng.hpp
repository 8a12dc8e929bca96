#ifndef SBCN_RNG_HPP
#define SBCN_RNG_HPP

#include <array>
#include <cstdint>

namespace sbcn {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from a base seed and a tag.
/// Used to hand each benchmark instance / offspring pair / bootstrap
/// replicate its own reproducible stream.
inline uint64_t seed_mix(uint64_t base, uint64_t tag) {
    uint64_t state = base ^ (tag * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL);
    return splitmix64(state);
}

// xoshiro256++ with splitmix64 seeding. Self-contained so that streams are
// bit-identical across standard libraries and platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t state = seed;
        for (auto& word : s_) word = splitmix64(state);
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Unbiased (rejection sampling); n must be > 0.
    uint64_t below(uint64_t n) {
        const uint64_t threshold = (0 - n) % n;
        for (;;) {
            const uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    bool bernoulli(double p) { return next_double() < p; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<uint64_t, 4> s_{};
};

} // namespace sbcn

#endif
