#pragma once

#include <cstdint>

namespace densityseek {

// Work counters the solvers expose for instrumentation. Each solver uses the
// counters that match its work profile and leaves the rest at zero:
//   skip_mismatch  comparisons = windows evaluated,
//                  positions_scanned = positions skipped past
//   dist_map       map_operations = lookups plus insertions
//   dist_sort      comparisons = sort comparator calls,
//                  positions_scanned = pairs visited by the clump scan
//   position_sweep positions_scanned = positions and pointer steps visited
// alloc_bytes reports the peak scratch footprint of the run.
struct SolverCounters {
    std::uint64_t comparisons = 0;
    std::uint64_t map_operations = 0;
    std::uint64_t positions_scanned = 0;
    std::uint64_t alloc_bytes = 0;
};

} // namespace densityseek
