#pragma once

#include <cstdint>

namespace park {

// splitmix64 finalizer (Stafford mix13)
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

// Counter-style generator: the state is derived from a (seed, stream, substream)
// key, so any (trial, car) pair gets its own reproducible stream regardless of
// execution order.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : s_(state) {}

    std::uint64_t next() {
        s_ += 0x9E3779B97F4A7C15ull;
        return mix64(s_);
    }

    // uniform in [0,1) with 53 random bits
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_unit() < p; }

    // unbiased uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t s_;
};

inline SplitMix64 make_stream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) {
    std::uint64_t s = mix64(seed + 0x632BE59BD9B4E019ull);
    s = mix64(s ^ (stream + 0x9E3779B97F4A7C15ull));
    s = mix64(s ^ (substream + 0xD1B54A32D192ED03ull));
    return SplitMix64(s);
}

}  // namespace park
