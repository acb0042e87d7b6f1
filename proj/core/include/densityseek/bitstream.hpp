#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace densityseek {

// Immutable bit sequence x_1..x_n, packed 64 bits per word. Indexing is
// 1-based throughout to match the span convention used by the solvers.
class Bitstream {
public:
    Bitstream() = default;

    // Builds from a string of '0'/'1' characters (no other bytes allowed).
    static Bitstream from_ascii(std::string_view bits);

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    // Bit at 1-based position i; i must satisfy 1 <= i <= size().
    int bit(std::size_t i) const
    {
        const std::size_t k = i - 1;
        return static_cast<int>((words_[k >> 6] >> (k & 63)) & 1u);
    }

    // Length of the maximal run of one bits starting at 1-based position i
    // (zero when bit i is zero), scanned a word at a time.
    std::size_t ones_run(std::size_t i) const;

    std::string to_ascii() const;

    bool operator==(const Bitstream&) const = default;

    // Construction helper: bits are appended in stream order.
    class Builder {
    public:
        explicit Builder(std::size_t reserve_bits = 0);
        void push(int bit);
        Bitstream finish() &&;

    private:
        std::vector<std::uint64_t> words_;
        std::size_t n_ = 0;
    };

private:
    std::vector<std::uint64_t> words_;
    std::size_t n_ = 0;
};

// Prefix one-counts: rank[k] = ones among x_1..x_k, rank[0] = 0.
class RankTable {
public:
    RankTable() = default;
    explicit RankTable(const Bitstream& s);

    std::size_t stream_size() const { return rank_.empty() ? 0 : rank_.size() - 1; }

    // rank over the prefix x_1..x_k, 0 <= k <= n.
    std::int64_t rank(std::size_t k) const { return rank_[k]; }

    // Ones within x_a..x_b; requires 1 <= a <= b <= n, else std::out_of_range.
    std::int64_t ones_in_range(std::size_t a, std::size_t b) const;

private:
    std::vector<std::uint32_t> rank_;
};

} // namespace densityseek
