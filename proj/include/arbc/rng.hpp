// Deterministic random streams for the simulator.
//
// xoshiro256++ engine seeded through splitmix64, plus a substream
// derivation that maps (master seed, run index) to an independent
// stream. Sequences are bit-identical across platforms and thread
// counts, which is what the reproducibility contract of the Monte
// Carlo harness rests on.

#pragma once

#include <cstdint>

namespace arbc {

namespace detail {

// splitmix64 finalizer; bijective on 64-bit words with full avalanche.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

} // namespace detail

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += detail::kGoldenGamma;
        return detail::mix64(state_);
    }

private:
    std::uint64_t state_;
};

// xoshiro256++ (Blackman & Vigna). Small, fast, 2^256-1 period.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = detail::kGoldenGamma;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in (0, 1]; never returns zero.
    double uniform01_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

/// Stream for run `index` under `master_seed`. mix64 is bijective, so for a
/// fixed master seed distinct indices always yield distinct stream seeds.
inline RandomStream substream(std::uint64_t master_seed, std::uint64_t index) {
    return RandomStream(detail::mix64(detail::mix64(master_seed + detail::kGoldenGamma) + index));
}

} // namespace arbc
