#pragma once

#include <cstdint>
#include <random>

namespace netlang {

// splitmix64 finalizer; derives independent stream seeds from a base seed.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Thin wrapper over mt19937_64. The standard <random> distributions are
// implementation-defined, so bounded ints and unit reals are produced here
// directly: identical seeds give identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    // Unbiased integer in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t reject = (0 - bound) % bound;  // 2^64 mod bound
        std::uint64_t x = engine_();
        while (x < reject) x = engine_();
        return x % bound;
    }

    std::size_t index(std::size_t bound) {
        return static_cast<std::size_t>(below(static_cast<std::uint64_t>(bound)));
    }

    // Uniform in [0, 1), 53-bit resolution.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace netlang
