#pragma once

#include <cstdint>
#include <optional>

#include "densityseek/bitstream.hpp"
#include "densityseek/ratio.hpp"

namespace densityseek {

// Which question is being answered about the substring density.
enum class Problem {
    fixed,   // density exactly alpha/beta
    bounded, // density at least alpha/beta
};

// Closed 1-based substring x_a..x_b, never empty. "No solution" is expressed
// as an empty optional, never as a zeroed span.
struct Span {
    std::int64_t a = 0;
    std::int64_t b = 0;

    std::int64_t length() const { return b - a + 1; }

    bool operator==(const Span&) const = default;
};

using SpanResult = std::optional<Span>;

// Checks that the span is in range and that its density satisfies the
// problem's relation to the ratio. Exact integer arithmetic throughout.
bool verify_span(const Bitstream& s, const Ratio& r, const Span& span, Problem problem);

// Degenerate densities. theta == 1 asks for the longest run of ones (both
// problems); theta == 0 asks for the longest run of zeroes when fixed, and
// admits the whole stream when bounded. Throws std::invalid_argument for a
// non-extreme ratio. Ties keep the smallest start.
SpanResult trivial_extremes(const Bitstream& s, const Ratio& r, Problem problem);

} // namespace densityseek
