#pragma once

#include <cstdint>

namespace aiot {

// splitmix64, used to derive independent stream seeds from one master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// xoshiro256** with hand-rolled distributions so that results are identical
// across standard libraries and platforms for a given seed.
class Rng {
public:
    Rng() : Rng(1) {}

    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    std::uint64_t next_u64() {
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

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return uniform() < p;
    }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
};

// Stream ids keep sub-seeds for the different consumers decoupled, so that
// e.g. placement draws are identical across mechanisms for the same seed.
enum class RngStream : std::uint64_t {
    placement = 0x706c6163656d6e74ull,
    reader = 0x72656164657230ull,
    device_base = 0x646576696365ull,
};

inline Rng make_stream(std::uint64_t master_seed, RngStream stream, std::uint64_t index = 0) {
    std::uint64_t st = master_seed ^ static_cast<std::uint64_t>(stream);
    std::uint64_t a = splitmix64(st);
    st += index * 0x9e3779b97f4a7c15ull;
    std::uint64_t b = splitmix64(st);
    return Rng(a ^ (b + 0x165667b19e3779f9ull + index));
}

} // namespace aiot
