#include "densityseek/oracle.hpp"

namespace densityseek {

namespace {

template <bool Exact>
SpanResult brute_scan(const Bitstream& s, const Ratio& r)
{
    const RankTable rank(s);
    const std::int64_t n = static_cast<std::int64_t>(s.size());
    for (std::int64_t len = n; len >= 1; --len) {
        const std::int64_t target = r.alpha * len;
        for (std::int64_t a = 1; a + len - 1 <= n; ++a) {
            const std::int64_t ones =
                rank.rank(static_cast<std::size_t>(a + len - 1)) -
                rank.rank(static_cast<std::size_t>(a - 1));
            const std::int64_t got = r.beta * ones;
            if (Exact ? got == target : got >= target)
                return Span{a, a + len - 1};
        }
    }
    return std::nullopt;
}

} // namespace

SpanResult brute_fixed(const Bitstream& s, const Ratio& r)
{
    return brute_scan<true>(s, r);
}

SpanResult brute_bounded(const Bitstream& s, const Ratio& r)
{
    return brute_scan<false>(s, r);
}

} // namespace densityseek
