#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace densityseek {

// Target density as a reduced fraction alpha/beta with 0 <= alpha <= beta,
// beta >= 1. Always stored reduced; construction enforces the invariants.
struct Ratio {
    std::int64_t alpha = 0;
    std::int64_t beta = 1;

    bool operator==(const Ratio&) const = default;

    // True for the degenerate densities 0 and 1, which are handled by
    // longest-run scans rather than the distance-based solvers.
    bool extreme() const { return alpha == 0 || alpha == beta; }

    std::string text() const
    {
        return std::to_string(alpha) + "/" + std::to_string(beta);
    }
};

// Builds a reduced ratio from a numerator/denominator pair.
// Throws std::invalid_argument unless 0 <= alpha <= beta and beta >= 1.
Ratio make_ratio(std::int64_t alpha, std::int64_t beta);

// Parses "A/B" (decimal, no signs or spaces) or the bare extremes "0"/"1".
// Throws std::invalid_argument on malformed text, beta == 0 or alpha > beta.
Ratio parse_ratio(std::string_view text);

} // namespace densityseek
