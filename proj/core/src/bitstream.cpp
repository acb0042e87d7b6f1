#include "densityseek/bitstream.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace densityseek {

Bitstream Bitstream::from_ascii(std::string_view bits)
{
    Builder b(bits.size());
    for (const char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bitstream: expected only '0' or '1'");
        b.push(c - '0');
    }
    return std::move(b).finish();
}

std::size_t Bitstream::ones_run(std::size_t i) const
{
    const std::size_t limit = n_ - (i - 1);
    const std::size_t k = i - 1;
    // Unused high bits of the last word are zero, so counting trailing ones
    // never runs past the stream on its own; the clamp guards mid-word ends.
    std::size_t run = std::countr_one(words_[k >> 6] >> (k & 63));
    if (run == 64 - (k & 63)) {
        for (std::size_t q = (k >> 6) + 1; q < words_.size(); ++q) {
            const auto t = static_cast<std::size_t>(std::countr_one(words_[q]));
            run += t;
            if (t < 64)
                break;
        }
    }
    return std::min(run, limit);
}

std::string Bitstream::to_ascii() const
{
    std::string out;
    out.reserve(n_);
    for (std::size_t i = 1; i <= n_; ++i)
        out.push_back(static_cast<char>('0' + bit(i)));
    return out;
}

Bitstream::Builder::Builder(std::size_t reserve_bits)
{
    words_.reserve((reserve_bits + 63) / 64);
}

void Bitstream::Builder::push(int bit)
{
    const std::size_t k = n_++;
    if ((k & 63) == 0)
        words_.push_back(0);
    if (bit)
        words_[k >> 6] |= std::uint64_t{1} << (k & 63);
}

Bitstream Bitstream::Builder::finish() &&
{
    Bitstream out;
    out.words_ = std::move(words_);
    out.n_ = n_;
    return out;
}

RankTable::RankTable(const Bitstream& s)
{
    rank_.resize(s.size() + 1);
    rank_[0] = 0;
    for (std::size_t i = 1; i <= s.size(); ++i)
        rank_[i] = rank_[i - 1] + static_cast<std::uint32_t>(s.bit(i));
}

std::int64_t RankTable::ones_in_range(std::size_t a, std::size_t b) const
{
    if (a < 1 || a > b || b >= rank_.size())
        throw std::out_of_range("ones_in_range: need 1 <= a <= b <= n");
    return static_cast<std::int64_t>(rank_[b]) - static_cast<std::int64_t>(rank_[a - 1]);
}

} // namespace densityseek
