#include "densityseek/random.hpp"

namespace densityseek {

Bitstream random_bitstream(std::uint64_t seed, std::size_t n, const Ratio& rho)
{
    SplitMix64 gen(seed);
    Bitstream::Builder out(n);
    const auto alpha = static_cast<std::uint64_t>(rho.alpha);
    const auto beta = static_cast<std::uint64_t>(rho.beta);
    for (std::size_t i = 0; i < n; ++i)
        out.push(gen.next() % beta < alpha);
    return std::move(out).finish();
}

namespace {

std::uint64_t mix(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b, std::uint64_t c)
{
    std::uint64_t s = mix(base + (a + 1) * 0x9E3779B97F4A7C15ULL);
    s = mix(s + (b + 1) * 0x9E3779B97F4A7C15ULL);
    return mix(s + (c + 1) * 0x9E3779B97F4A7C15ULL);
}

} // namespace densityseek
