#pragma once

#include <cstdint>

namespace fairaudit {

/// SplitMix64 (Steele, Lea & Flood, 2014). Uses only wrapping 64-bit
/// arithmetic, so streams are identical on every platform. Each instance is
/// one stream fully determined by its seed; the simulator derives one
/// independent substream per subject via substream_seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 mantissa bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) via unbiased rejection; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// Seed for one subject's substream: the run seed mixed with the subject's
/// sorted-roster index. Keying by index keeps a subject's stream stable when
/// other subjects' sample counts change.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t subject_index) {
    SplitMix64 mixer(seed ^ (0xD1B54A32D192ED03ULL * (subject_index + 1)));
    return mixer.next();
}

}  // namespace fairaudit
