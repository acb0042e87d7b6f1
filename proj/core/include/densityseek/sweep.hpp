#pragma once

#include <vector>

#include "densityseek/bitstream.hpp"
#include "densityseek/counters.hpp"
#include "densityseek/distance.hpp"
#include "densityseek/ratio.hpp"
#include "densityseek/span.hpp"

namespace densityseek {

// Positions whose distance is strictly below everything before them
// (position 0 always qualifies). Increasing in position, strictly
// decreasing in distance. Only such positions can start a longest
// bounded-density span.
std::vector<std::int64_t> minimal_positions(const DistanceSeq& d);

// Positions whose distance is strictly above everything after them
// (position n always qualifies). Increasing in position, strictly
// decreasing in distance. Only such positions can end one.
std::vector<std::int64_t> maximal_positions(const DistanceSeq& d);

// Bounded-density solver: pairs each minimal position with the rightmost
// maximal position of no smaller distance. Both lists decrease in distance,
// so one monotone pointer suffices. Requires 0 < alpha < beta.
SpanResult position_sweep(const Bitstream& s, const Ratio& r,
                          SolverCounters* counters = nullptr);

} // namespace densityseek
