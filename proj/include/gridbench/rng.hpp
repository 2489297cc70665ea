#pragma once

#include <cstdint>
#include <vector>

namespace gridbench {

/// Deterministic 64-bit generator (splitmix64). We avoid <random>
/// distributions because their output is implementation-defined; datasets
/// must be byte-identical for a given seed on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling keeps the draw unbiased
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    /// True with probability p (53-bit resolution).
    bool chance(double p) {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 < p;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

/// Counter-based stream split: instance i of a run seeded with s draws from
/// an independent stream, so generation order never affects the data.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ULL + index * 0xd1b54a32d192ed03ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace gridbench
