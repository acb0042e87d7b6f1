#pragma once

#include "densityseek/bitstream.hpp"
#include "densityseek/ratio.hpp"
#include "densityseek/span.hpp"

namespace densityseek {

// Quadratic reference solvers. They scan spans longest-first via a rank
// table, so the result is a maximal-length span and ties resolve to the
// smallest start. Used as the ground truth the fast solvers are checked
// against; accepts the extreme ratios 0 and 1 as well.

SpanResult brute_fixed(const Bitstream& s, const Ratio& r);
SpanResult brute_bounded(const Bitstream& s, const Ratio& r);

} // namespace densityseek
