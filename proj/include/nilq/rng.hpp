#pragma once

#include <cstdint>

namespace nilq {

/// Deterministic splitmix64 generator. Streams derived from (seed, index)
/// are independent, so sampling tasks can be fanned out and merged in
/// index order without losing reproducibility.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        Rng mixer(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mixer.next();
        return Rng(mixer.next());
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n), n > 0. Rejection sampling keeps the
    /// distribution exact and the stream deterministic.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

private:
    std::uint64_t state_;
};

}  // namespace nilq
