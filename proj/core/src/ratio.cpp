#include "densityseek/ratio.hpp"

#include <numeric>
#include <stdexcept>

namespace densityseek {

Ratio make_ratio(std::int64_t alpha, std::int64_t beta)
{
    if (beta < 1)
        throw std::invalid_argument("ratio: denominator must be positive");
    if (alpha < 0 || alpha > beta)
        throw std::invalid_argument("ratio: density must lie in [0, 1]");
    const std::int64_t g = std::gcd(alpha, beta);
    if (g > 1) {
        alpha /= g;
        beta /= g;
    }
    return Ratio{alpha, beta};
}

namespace {

bool parse_u63(std::string_view text, std::int64_t& out)
{
    if (text.empty() || text.size() > 18)
        return false;
    std::int64_t v = 0;
    for (const char c : text) {
        if (c < '0' || c > '9')
            return false;
        v = v * 10 + (c - '0');
    }
    out = v;
    return true;
}

} // namespace

Ratio parse_ratio(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (text == "0")
            return Ratio{0, 1};
        if (text == "1")
            return Ratio{1, 1};
        throw std::invalid_argument("ratio: expected A/B or a bare 0 or 1");
    }
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    if (!parse_u63(text.substr(0, slash), alpha) ||
        !parse_u63(text.substr(slash + 1), beta))
        throw std::invalid_argument("ratio: expected decimal numerator and denominator");
    if (beta == 0)
        throw std::invalid_argument("ratio: zero denominator");
    if (alpha > beta)
        throw std::invalid_argument("ratio: density must lie in [0, 1]");
    return make_ratio(alpha, beta);
}

} // namespace densityseek
