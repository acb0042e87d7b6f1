#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "densityseek/ratio.hpp"
#include "densityseek/solve.hpp"

namespace densityseek {

// One comparative experiment: every (algorithm, length, theta, repeat)
// combination runs on a stream derived deterministically from the base seed
// and the case indices, so all algorithms within a case see the same bits
// and reruns reproduce byte-identical streams.
struct BenchConfig {
    std::vector<std::size_t> lengths;
    std::vector<Ratio> thetas;
    std::vector<Algorithm> algorithms;
    std::size_t repeats = 3;
    std::uint64_t seed = 1;
    Ratio rho { 1, 2 }; // density of the generated streams
    Problem problem = Problem::fixed;
};

struct BenchRecord {
    Algorithm algorithm;
    std::size_t n = 0;
    Ratio theta;
    std::size_t repeat = 0; // 0-based
    double seconds = 0.0;
    std::int64_t result_length = 0; // 0 when no span exists
    std::uint64_t ops = 0; // the algorithm's signature work counter
    std::uint64_t alloc_bytes = 0;
};

// Runs the experiment, streaming CSV to `csv`: a header, one row per case,
// and one mean row (repeat column "mean") per (algorithm, n, theta) group.
// Columns: algorithm,n,theta,repeat,seconds,result_length,ops,alloc_bytes.
// Algorithms that cannot answer cfg.problem are skipped with a note to
// `diag`, as are any cross-algorithm result-length disagreements (none are
// expected). Returns the per-case records for programmatic use.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg, std::ostream& csv,
                                   std::ostream* diag = nullptr);

} // namespace densityseek
