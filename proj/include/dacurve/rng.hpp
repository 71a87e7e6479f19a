#pragma once

#include <cstdint>

namespace dacurve {

// SplitMix64. Deterministic across platforms, cheap to seed. Every random
// stream in the library is derived from (seed, counter) so a computation
// split over workers produces the same bytes as a serial run.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [lo, hi], inclusive. Rejection sampling, no modulo
    // bias.
    long long uniform(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<long long>(next());  // full range
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<long long>(v % span);
    }

    // Stream for trial `counter` under `seed`.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t counter) {
        SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ULL * (counter + 1)));
        return SplitMix64(mix.next());
    }

private:
    std::uint64_t state_;
};

}  // namespace dacurve
