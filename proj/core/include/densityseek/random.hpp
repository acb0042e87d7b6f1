#pragma once

#include <cstdint>

#include "densityseek/bitstream.hpp"
#include "densityseek/ratio.hpp"

namespace densityseek {

// splitmix64: additive golden-ratio state with the two-round
// xor-shift-multiply finalizer. Chosen so generated streams are reproducible
// from the seed alone, across platforms and builds.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// n bits where bit i is one iff the i-th splitmix64 draw modulo rho.beta is
// below rho.alpha. Same seed, same stream, always.
Bitstream random_bitstream(std::uint64_t seed, std::size_t n, const Ratio& rho);

// Deterministic per-case seed from a base seed and up to three indices.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

} // namespace densityseek
