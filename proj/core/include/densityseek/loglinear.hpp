#pragma once

#include <vector>

#include "densityseek/bitstream.hpp"
#include "densityseek/counters.hpp"
#include "densityseek/ratio.hpp"
#include "densityseek/span.hpp"

namespace densityseek {

// Comparison-based solvers. All three require a non-extreme ratio
// (0 < alpha < beta) and throw std::invalid_argument otherwise; the extreme
// densities are answered by trivial_extremes.

// Fixed-density search that slides one window per candidate length, longest
// first, skipping ahead by the ones-count mismatch. Exact result, but the
// running time degrades as the target density approaches the stream density.
SpanResult skip_mismatch(const Bitstream& s, const Ratio& r,
                         SolverCounters* counters = nullptr);

// Fixed-density search in one pass: an ordered map remembers the first
// position of every distance value; equal distances bound a solution.
SpanResult dist_map(const Bitstream& s, const Ratio& r,
                    SolverCounters* counters = nullptr);

// (distance, position) pair, sorted by distance to group equal distances.
struct DistPos {
    std::int64_t dist = 0;
    std::int64_t pos = 0;

    bool operator==(const DistPos&) const = default;
};

// The n+1 distance/position pairs ordered by distance (ties in any order).
std::vector<DistPos> sorted_distance_pairs(const Bitstream& s, const Ratio& r,
                                           SolverCounters* counters = nullptr);

// Sort-based solver for either problem. Scans clumps of equal distance,
// tracking the extreme positions; in bounded mode the minimum persists
// across clumps (distances are scanned in increasing order, so any earlier
// position is a valid left endpoint).
SpanResult dist_sort(const Bitstream& s, const Ratio& r, Problem problem,
                     SolverCounters* counters = nullptr);

} // namespace densityseek
