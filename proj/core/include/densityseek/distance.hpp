#pragma once

#include <cstdint>
#include <vector>

#include "densityseek/bitstream.hpp"
#include "densityseek/ratio.hpp"

namespace densityseek {

// d[i] = beta * rank(i) - alpha * i for i = 0..n. The two key facts the
// solvers rest on: x_a..x_b has density exactly alpha/beta iff
// d[a-1] == d[b], and density at least alpha/beta iff d[a-1] <= d[b].
// Each step moves by +(beta - alpha) on a one bit and by -alpha on a zero.
using DistanceSeq = std::vector<std::int64_t>;

// Rejects streams where n * beta could overflow the signed 64-bit distance
// range; |d[i]| is bounded by n * beta.
void check_distance_overflow(std::size_t n, const Ratio& r);

DistanceSeq distance_sequence(const Bitstream& s, const Ratio& r);

} // namespace densityseek
