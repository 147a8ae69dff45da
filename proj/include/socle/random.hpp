#pragma once

#include <cstdint>

namespace socle {

/// Counter-based generator (splitmix64 over seed + counter). Streams derived with
/// split() are independent of how many draws the parent has made.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : seed_(mix(seed)) {}

    std::uint64_t next() { return mix(seed_ + kGamma * ++counter_); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    /// Child stream keyed by `key`.
    Rng split(std::uint64_t key) const { return Rng(seed_ ^ mix(key + kGamma)); }

    static std::uint64_t mix(std::uint64_t z) {
        z += kGamma;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace socle
