#pragma once

#include <cstdint>
#include <cmath>

namespace sphcap {

struct Seed {
    std::uint64_t value = 0;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
}  // namespace detail

// Deterministic, platform-independent random stream based on splitmix64.
// Each (seed, index, tag) triple names an independent stream, so parallel
// generation partitions the index space instead of sharing generator state.
class RandomStream {
public:
    RandomStream(Seed seed, std::uint64_t index, std::uint64_t tag = 0) {
        state_ = detail::mix64(seed.value + 0x9e3779b97f4a7c15ull);
        state_ = detail::mix64(state_ ^ (index + 0xbf58476d1ce4e5b9ull));
        state_ = detail::mix64(state_ ^ (tag + 0x94d049bb133111ebull));
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return detail::mix64(state_);
    }

    // Uniform in (0, 1]; never returns 0, so log() is safe.
    double uniform01() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard Gaussian via Box-Muller (explicit formula, bit-stable across
    // platforms unlike std::normal_distribution).
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

namespace tags {
inline constexpr std::uint64_t kPointSet = 0;
inline constexpr std::uint64_t kMcSample = 0x9e3779b97f4a7c15ull;
inline constexpr std::uint64_t kJitter = 0xda942042e4dd58b5ull;
}  // namespace tags

}  // namespace sphcap
