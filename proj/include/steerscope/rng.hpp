#pragma once

#include <cstdint>
#include <random>

namespace steerscope {

// SplitMix64 finalizer; used to derive independent substream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seedable 64-bit generator with a fixed substream rule: substream(k) of a
// generator seeded with s is seeded with splitmix64(splitmix64(s) ^ k').
// Sample k of an ensemble, restart k of an optimizer, and so on, each draw
// from substream k, so results do not depend on evaluation order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    Rng substream(std::uint64_t index) const {
        return Rng(splitmix64(splitmix64(seed_) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
    }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller; the second variate is cached.
    double gaussian();

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace steerscope
