#include "densityseek/span.hpp"

#include <stdexcept>

namespace densityseek {

bool verify_span(const Bitstream& s, const Ratio& r, const Span& span, Problem problem)
{
    if (span.a < 1 || span.a > span.b ||
        span.b > static_cast<std::int64_t>(s.size()))
        return false;
    std::int64_t ones = 0;
    for (std::int64_t i = span.a; i <= span.b; ++i)
        ones += s.bit(static_cast<std::size_t>(i));
    // density ones/len vs alpha/beta, cross-multiplied.
    const std::int64_t lhs = r.beta * ones;
    const std::int64_t rhs = r.alpha * span.length();
    return problem == Problem::fixed ? lhs == rhs : lhs >= rhs;
}

namespace {

// First longest run of the given bit value, or absent when none exists.
SpanResult longest_run(const Bitstream& s, int value)
{
    SpanResult best;
    std::int64_t best_len = 0;
    std::int64_t run_start = 0;
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(s.size()); ++i) {
        if (s.bit(static_cast<std::size_t>(i)) != value) {
            run_start = 0;
            continue;
        }
        if (run_start == 0)
            run_start = i;
        if (i - run_start + 1 > best_len) {
            best_len = i - run_start + 1;
            best = Span{run_start, i};
        }
    }
    return best;
}

} // namespace

SpanResult trivial_extremes(const Bitstream& s, const Ratio& r, Problem problem)
{
    if (!r.extreme())
        throw std::invalid_argument("trivial_extremes: ratio must be 0 or 1");
    if (s.empty())
        return std::nullopt;
    if (r.alpha == r.beta)
        return longest_run(s, 1);
    if (problem == Problem::bounded)
        return Span{1, static_cast<std::int64_t>(s.size())};
    return longest_run(s, 0);
}

} // namespace densityseek
