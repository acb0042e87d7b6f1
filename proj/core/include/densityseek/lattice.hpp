#pragma once

#include <cstdint>

#include "densityseek/ratio.hpp"

namespace densityseek {

// The distance values land on a lattice: every value z has exactly one
// representation (beta - alpha) * col - alpha * row = z with
// 0 <= row < beta - alpha. A one bit moves one column right; a zero bit
// moves one row down, wrapping from the bottom row to row 0 shifted
// alpha columns left. Requires 0 < alpha < beta.
struct LatticeCoord {
    std::int64_t row = 0;
    std::int64_t col = 0;

    bool operator==(const LatticeCoord&) const = default;
};

LatticeCoord lattice_coords(std::int64_t z, const Ratio& r);
std::int64_t lattice_value(const LatticeCoord& rc, const Ratio& r);
LatticeCoord lattice_step(const LatticeCoord& rc, int bit, const Ratio& r);

} // namespace densityseek
