#pragma once

#include <cmath>
#include <cstdint>

namespace reebdeco {

// Splittable deterministic RNG. splitmix64 core with explicit Box-Muller for
// normals, so streams are bit-identical across platforms and standard-library
// versions (std::*_distribution output is implementation-defined).
//
// Every random quantity in the toolkit is drawn from a stream derived from a
// single 64-bit seed via derive(tag), which never advances the parent stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit mantissa.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double next_range(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform integer in [0, n). Modulo bias is irrelevant at our n.
    std::uint64_t next_below(std::uint64_t n) { return n ? next_u64() % n : 0; }

    // Standard normal via Box-Muller; second value cached.
    double next_normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = next_double();
        double u2 = next_double();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 6.283185307179586476925286766559 * u2;
        cached_ = radius * std::sin(angle);
        have_cached_ = true;
        return radius * std::cos(angle);
    }

    // Independent child stream; does not consume from this stream.
    SplitMix64 derive(std::uint64_t tag) const {
        SplitMix64 mixer(state_ ^ (0xd1342543de82ef95ULL * (tag + 1)));
        return SplitMix64(mixer.next_u64());
    }

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace reebdeco
