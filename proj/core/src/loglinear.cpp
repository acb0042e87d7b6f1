#include "densityseek/loglinear.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <stdexcept>

#include "densityseek/distance.hpp"

namespace densityseek {

namespace {

void require_proper(const Ratio& r, const char* who)
{
    if (r.extreme())
        throw std::invalid_argument(std::string(who) + ": ratio must satisfy 0 < alpha < beta");
}

struct AllocMeter {
    std::uint64_t current = 0;
    std::uint64_t peak = 0;

    void add(std::uint64_t bytes)
    {
        current += bytes;
        peak = std::max(peak, current);
    }
    void sub(std::uint64_t bytes) { current -= bytes; }
};

template <class T>
struct MeteredAlloc {
    using value_type = T;

    AllocMeter* meter;

    explicit MeteredAlloc(AllocMeter* m) : meter(m) {}
    template <class U>
    MeteredAlloc(const MeteredAlloc<U>& other) : meter(other.meter) {}

    T* allocate(std::size_t n)
    {
        meter->add(n * sizeof(T));
        return std::allocator<T>().allocate(n);
    }
    void deallocate(T* p, std::size_t n)
    {
        meter->sub(n * sizeof(T));
        std::allocator<T>().deallocate(p, n);
    }

    template <class U>
    bool operator==(const MeteredAlloc<U>& other) const { return meter == other.meter; }
};

} // namespace

SpanResult skip_mismatch(const Bitstream& s, const Ratio& r, SolverCounters* counters)
{
    require_proper(r, "skip_mismatch");
    check_distance_overflow(s.size(), r);
    SolverCounters scratch;
    SolverCounters& c = counters ? *counters : scratch;

    const std::int64_t n = static_cast<std::int64_t>(s.size());
    const RankTable rank(s);
    c.alloc_bytes = (s.size() + 1) * sizeof(std::uint32_t);

    for (std::int64_t k = n / r.beta; k >= 1; --k) {
        const std::int64_t len = k * r.beta;
        const std::int64_t target = k * r.alpha;
        std::int64_t a = 1;
        std::int64_t b = len;
        while (b <= n) {
            ++c.comparisons;
            const std::int64_t ones = rank.rank(static_cast<std::size_t>(b)) -
                                      rank.rank(static_cast<std::size_t>(a - 1));
            const std::int64_t eps = std::abs(target - ones);
            if (eps == 0)
                return Span{a, b};
            a += eps;
            b += eps;
            c.positions_scanned += static_cast<std::uint64_t>(eps);
        }
    }
    return std::nullopt;
}

SpanResult dist_map(const Bitstream& s, const Ratio& r, SolverCounters* counters)
{
    require_proper(r, "dist_map");
    check_distance_overflow(s.size(), r);
    SolverCounters scratch;
    SolverCounters& c = counters ? *counters : scratch;

    AllocMeter meter;
    using Alloc = MeteredAlloc<std::pair<const std::int64_t, std::int64_t>>;
    std::map<std::int64_t, std::int64_t, std::less<std::int64_t>, Alloc> first_at{
        std::less<std::int64_t>{}, Alloc{&meter}};

    first_at.emplace(0, 0);
    ++c.map_operations;

    const std::int64_t up = r.beta - r.alpha;
    const std::int64_t down = -r.alpha;
    std::int64_t delta = 0;
    Span best{};
    std::int64_t best_len = 0;

    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(s.size()); ++i) {
        delta += s.bit(static_cast<std::size_t>(i)) ? up : down;
        ++c.map_operations;
        const auto it = first_at.lower_bound(delta);
        if (it == first_at.end() || it->first != delta) {
            first_at.emplace_hint(it, delta, i);
            ++c.map_operations;
        } else if (i - it->second > best_len) {
            best = Span{it->second + 1, i};
            best_len = best.length();
        }
    }
    c.alloc_bytes = meter.peak;
    return best_len > 0 ? SpanResult{best} : std::nullopt;
}

std::vector<DistPos> sorted_distance_pairs(const Bitstream& s, const Ratio& r,
                                           SolverCounters* counters)
{
    require_proper(r, "sorted_distance_pairs");
    check_distance_overflow(s.size(), r);

    std::vector<DistPos> pairs;
    pairs.reserve(s.size() + 1);
    const std::int64_t up = r.beta - r.alpha;
    const std::int64_t down = -r.alpha;
    std::int64_t delta = 0;
    pairs.push_back(DistPos{0, 0});
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(s.size()); ++i) {
        delta += s.bit(static_cast<std::size_t>(i)) ? up : down;
        pairs.push_back(DistPos{delta, i});
    }

    if (counters) {
        counters->alloc_bytes += pairs.capacity() * sizeof(DistPos);
        std::uint64_t* comparisons = &counters->comparisons;
        std::sort(pairs.begin(), pairs.end(), [comparisons](const DistPos& x, const DistPos& y) {
            ++*comparisons;
            return x.dist < y.dist;
        });
    } else {
        std::sort(pairs.begin(), pairs.end(),
                  [](const DistPos& x, const DistPos& y) { return x.dist < y.dist; });
    }
    return pairs;
}

SpanResult dist_sort(const Bitstream& s, const Ratio& r, Problem problem,
                     SolverCounters* counters)
{
    const std::vector<DistPos> pairs = sorted_distance_pairs(s, r, counters);

    Span best{};
    std::int64_t best_len = 0;
    std::int64_t pmin = pairs[0].pos;
    std::size_t i = 0;
    while (i < pairs.size()) {
        // Clump of equal distances begins. A fixed-density span needs equal
        // endpoint distances, so the minimum resets per clump; a bounded one
        // only needs a smaller-or-equal earlier distance, so it persists.
        if (problem == Problem::fixed)
            pmin = pairs[i].pos;
        else
            pmin = std::min(pmin, pairs[i].pos);
        std::int64_t pmax = pairs[i].pos;
        if (counters)
            ++counters->positions_scanned;
        ++i;
        while (i < pairs.size() && pairs[i].dist == pairs[i - 1].dist) {
            pmin = std::min(pmin, pairs[i].pos);
            pmax = std::max(pmax, pairs[i].pos);
            if (counters)
                ++counters->positions_scanned;
            ++i;
        }
        if (pmax - pmin > best_len) {
            best = Span{pmin + 1, pmax};
            best_len = best.length();
        }
    }
    return best_len > 0 ? SpanResult{best} : std::nullopt;
}

} // namespace densityseek
