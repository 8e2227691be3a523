#pragma once

#include <cstdint>

namespace nilq {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic stream keyed by (seed, index). Streams for different indices are
/// independent, so samples can be drawn in any order or in parallel and still
/// reproduce bit for bit. Uniform draws use rejection, not std distributions,
/// whose output is implementation-defined.
class SampleStream {
public:
    SampleStream(std::uint64_t seed, std::uint64_t index) noexcept
        : key_(splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL + 0x2545f4914f6cdd1dULL))) {}

    std::uint64_t next() noexcept { return splitmix64(key_ + counter_++ * 0x9e3779b97f4a7c15ULL); }

    /// Uniform in [0, bound).
    std::uint64_t uniform(std::uint64_t bound) noexcept {
        if (bound <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do x = next();
        while (x >= limit);
        return x % bound;
    }

    /// Uniform in [lo, hi].
    std::int64_t uniform_between(std::int64_t lo, std::int64_t hi) noexcept {
        return lo + static_cast<std::int64_t>(uniform(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace nilq
