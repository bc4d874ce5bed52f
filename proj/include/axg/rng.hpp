#pragma once

#include <cstdint>
#include <random>

namespace axg {

// Deterministic RNG: mt19937_64 raw draws only, so identical streams on every
// platform. Distribution helpers are hand-rolled for the same reason.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform-ish in [0, k); k > 0
    std::uint64_t bounded(std::uint64_t k) { return eng_() % k; }

    int below(int k) { return int(bounded(std::uint64_t(k))); }

    // true with probability num/den
    bool chance(std::uint64_t num, std::uint64_t den) { return bounded(den) < num; }

    // decorrelated stream for item i of a seeded batch
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (i + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace axg
