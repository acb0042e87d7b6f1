#pragma once

#include <optional>
#include <string_view>

#include "densityseek/bitstream.hpp"
#include "densityseek/counters.hpp"
#include "densityseek/mapping_matrix.hpp"
#include "densityseek/ratio.hpp"
#include "densityseek/span.hpp"

namespace densityseek {

enum class Algorithm {
    brute,
    skip_mismatch,
    dist_map,
    dist_sort,
    dist_matrix,
    position_sweep,
    automatic, // dist_matrix for fixed, position_sweep for bounded
};

std::string_view algorithm_name(Algorithm alg); // "skip-mismatch", "auto", ...
std::optional<Algorithm> parse_algorithm(std::string_view text);

// skip-mismatch, dist-map and dist-matrix answer only the fixed problem;
// position-sweep only the bounded one; brute and dist-sort answer both.
bool algorithm_supports(Algorithm alg, Problem problem);

// Resolves `automatic` to the concrete default for the problem.
Algorithm resolve_algorithm(Algorithm alg, Problem problem);

// Runs one solver end to end. theta in {0, 1} is answered by
// trivial_extremes no matter which algorithm was requested. Counter and
// matrix-statistics sinks are filled when non-null and the algorithm
// produces them. Throws std::invalid_argument on an unsupported
// algorithm/problem pairing and std::overflow_error when n * beta would not
// fit the distance arithmetic.
SpanResult solve(const Bitstream& s, const Ratio& theta, Problem problem, Algorithm alg,
                 SolverCounters* counters = nullptr, MatrixStats* matrix = nullptr);

} // namespace densityseek
