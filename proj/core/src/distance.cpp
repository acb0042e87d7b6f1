#include "densityseek/distance.hpp"

#include <stdexcept>

namespace densityseek {

void check_distance_overflow(std::size_t n, const Ratio& r)
{
    constexpr std::int64_t limit = std::int64_t{1} << 62;
    if (n > 0 && r.beta > limit / static_cast<std::int64_t>(n))
        throw std::overflow_error("distance: stream length times denominator exceeds 2^62");
}

DistanceSeq distance_sequence(const Bitstream& s, const Ratio& r)
{
    check_distance_overflow(s.size(), r);
    DistanceSeq d(s.size() + 1);
    d[0] = 0;
    const std::int64_t up = r.beta - r.alpha;
    const std::int64_t down = -r.alpha;
    for (std::size_t i = 1; i <= s.size(); ++i)
        d[i] = d[i - 1] + (s.bit(i) ? up : down);
    return d;
}

} // namespace densityseek
