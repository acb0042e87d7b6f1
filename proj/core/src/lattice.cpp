#include "densityseek/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace densityseek {

namespace {

void require_proper(const Ratio& r)
{
    if (r.extreme())
        throw std::invalid_argument("lattice: ratio must satisfy 0 < alpha < beta");
}

std::int64_t floor_mod(std::int64_t x, std::int64_t m)
{
    const std::int64_t rem = x % m;
    return rem < 0 ? rem + m : rem;
}

// Inverse of a modulo m via the extended Euclid identity; gcd(a, m) must
// be 1, which alpha and beta - alpha satisfy because the ratio is reduced.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m)
{
    if (m == 1)
        return 0;
    std::int64_t old_r = a, cur_r = m;
    std::int64_t old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        const std::int64_t q = old_r / cur_r;
        old_r = std::exchange(cur_r, old_r - q * cur_r);
        old_s = std::exchange(cur_s, old_s - q * cur_s);
    }
    return floor_mod(old_s, m);
}

} // namespace

LatticeCoord lattice_coords(std::int64_t z, const Ratio& r)
{
    require_proper(r);
    const std::int64_t g = r.beta - r.alpha;
    // (beta - alpha) col = z + alpha row, so row = -z / alpha modulo g.
    const std::int64_t row =
        floor_mod(-floor_mod(z, g) * mod_inverse(floor_mod(r.alpha, g), g), g);
    return LatticeCoord{row, (z + r.alpha * row) / g};
}

std::int64_t lattice_value(const LatticeCoord& rc, const Ratio& r)
{
    require_proper(r);
    return (r.beta - r.alpha) * rc.col - r.alpha * rc.row;
}

LatticeCoord lattice_step(const LatticeCoord& rc, int bit, const Ratio& r)
{
    require_proper(r);
    if (bit)
        return LatticeCoord{rc.row, rc.col + 1};
    if (rc.row < r.beta - r.alpha - 1)
        return LatticeCoord{rc.row + 1, rc.col};
    return LatticeCoord{0, rc.col - r.alpha};
}

} // namespace densityseek
