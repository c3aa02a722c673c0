#pragma once

#include <cstdint>
#include <random>

namespace bbplan {

// Deterministic random source. std::mt19937_64 produces the same stream on
// every implementation; the helpers below avoid std::uniform_int_distribution,
// whose output is not portable across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, bound). bound must be >= 1.
    std::uint64_t below(std::uint64_t bound) {
        // Rejection sampling over the top multiple of bound keeps it unbiased.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    bool coin() { return engine_() & 1u; }

private:
    std::mt19937_64 engine_;
};

// Mixes a base seed with a stream id and an index (splitmix64 finalizer), so
// that per-instance generators are decorrelated but fully reproducible.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream * 0x100000001b3ull + index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace bbplan
