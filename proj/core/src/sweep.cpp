#include "densityseek/sweep.hpp"

#include <algorithm>
#include <stdexcept>

namespace densityseek {

std::vector<std::int64_t> minimal_positions(const DistanceSeq& d)
{
    std::vector<std::int64_t> out;
    out.push_back(0);
    for (std::size_t i = 1; i < d.size(); ++i)
        if (d[i] < d[static_cast<std::size_t>(out.back())])
            out.push_back(static_cast<std::int64_t>(i));
    return out;
}

std::vector<std::int64_t> maximal_positions(const DistanceSeq& d)
{
    std::vector<std::int64_t> out;
    out.push_back(static_cast<std::int64_t>(d.size()) - 1);
    for (std::int64_t i = static_cast<std::int64_t>(d.size()) - 2; i >= 0; --i)
        if (d[static_cast<std::size_t>(i)] > d[static_cast<std::size_t>(out.back())])
            out.push_back(i);
    std::reverse(out.begin(), out.end());
    return out;
}

SpanResult position_sweep(const Bitstream& s, const Ratio& r, SolverCounters* counters)
{
    if (r.extreme())
        throw std::invalid_argument("position_sweep: ratio must satisfy 0 < alpha < beta");
    const DistanceSeq d = distance_sequence(s, r);
    const std::vector<std::int64_t> starts = minimal_positions(d);
    const std::vector<std::int64_t> ends = maximal_positions(d);
    if (counters) {
        counters->positions_scanned += 2 * d.size();
        counters->alloc_bytes += (d.capacity() + starts.capacity() + ends.capacity()) *
                                 sizeof(std::int64_t);
    }

    // Both lists decrease strictly in distance, so as the start's distance
    // drops the rightmost admissible end only moves right. The first
    // admissible end is ends[0]: it carries the global maximum distance.
    Span best{};
    std::int64_t best_len = 0;
    std::size_t j = 0;
    for (const std::int64_t a : starts) {
        while (j + 1 < ends.size() &&
               d[static_cast<std::size_t>(a)] <= d[static_cast<std::size_t>(ends[j + 1])]) {
            ++j;
            if (counters)
                ++counters->positions_scanned;
        }
        if (ends[j] - a > best_len) {
            best = Span{a + 1, ends[j]};
            best_len = best.length();
        }
    }
    return best_len > 0 ? SpanResult{best} : std::nullopt;
}

} // namespace densityseek
