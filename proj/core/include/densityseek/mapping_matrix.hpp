#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "densityseek/bitstream.hpp"
#include "densityseek/ratio.hpp"
#include "densityseek/span.hpp"

namespace densityseek {

// Records store columns and stream positions as 32-bit integers to keep
// each record inside half a cache line. Walk entry points reject anything
// at or beyond this bound, which leaves headroom so column arithmetic
// (plus one per right step, minus alpha per wrap) never reaches the
// sentinel bit patterns. A stream near this bound would need tens of
// gigabytes of records anyway.
inline constexpr std::int64_t matrix_coordinate_limit = std::int64_t{1} << 30;

// Column index extended with a sentinel below and above every finite value.
class Column {
public:
    static constexpr Column neg_infinity() { return Column{std::numeric_limits<std::int32_t>::min()}; }
    static constexpr Column pos_infinity() { return Column{std::numeric_limits<std::int32_t>::max()}; }
    static constexpr Column finite(std::int64_t c) { return Column{static_cast<std::int32_t>(c)}; }

    bool is_finite() const { return *this != neg_infinity() && *this != pos_infinity(); }
    std::int64_t value() const { return v_; }

    auto operator<=>(const Column&) const = default;

private:
    constexpr explicit Column(std::int32_t v) : v_(v) {}

    std::int32_t v_;
};

using CellHandle = std::uint32_t;
inline constexpr CellHandle no_cell = std::numeric_limits<CellHandle>::max();

// First-visit positions are 0..n, so -1 can stand for "no value". Run
// starts encode a neighbouring value minus one and so legitimately reach -1
// (right neighbour first visited at position 0); they need their own
// sentinel.
inline constexpr std::int32_t no_value = -1;
inline constexpr std::int32_t no_run = std::numeric_limits<std::int32_t>::min();

// One explicit cell of the sparse first-visit matrix. Only cells adjacent to
// a down step, the origin, the cursor and the per-row sentinels are kept;
// everything in between is a run of consecutive values reconstructed from
// run_start, which encodes the value of column + 1 minus one. The row index
// and three pin flags share one word so the record stays at 32 bytes and,
// being 32-byte aligned, never straddles a cache line.
struct alignas(32) CellRecord {
    static constexpr std::uint32_t row_mask = (1u << 29) - 1;
    static constexpr std::uint32_t sentinel_bit = 1u << 29;
    static constexpr std::uint32_t entry_bit = 1u << 30;  // a down step landed here
    static constexpr std::uint32_t origin_bit = 1u << 31; // the cell of position 0

    Column column = Column::finite(0);
    std::int32_t cell_value = no_value;
    std::int32_t run_start = no_run;
    CellHandle prev = no_cell;
    CellHandle next = no_cell;
    CellHandle vertical = no_cell;  // endpoint of the down step taken from here
    CellHandle secondary = no_cell; // nearest vertical-link carrier to the right
    std::uint32_t meta = 0;

    std::int32_t row() const { return static_cast<std::int32_t>(meta & row_mask); }
    bool sentinel() const { return (meta & sentinel_bit) != 0; }
    bool entry() const { return (meta & entry_bit) != 0; }
    bool origin() const { return (meta & origin_bit) != 0; }
    void set_row(std::int32_t r) { meta = (meta & ~row_mask) | static_cast<std::uint32_t>(r); }
    void mark_sentinel() { meta |= sentinel_bit; }
    void mark_entry() { meta |= entry_bit; }
    void mark_origin() { meta |= origin_bit; }
};
static_assert(sizeof(CellRecord) == 32);

struct MatrixStats {
    std::uint64_t right_steps = 0;
    std::uint64_t down_steps = 0;
    std::uint64_t walk_links_followed = 0;
    std::uint64_t cells_allocated = 0;
};

enum class MatrixChecks {
    none,
    shadowed, // keep a plain per-row map of first visits for auditing
};

// Sparse map from lattice cells to the first stream position that visited
// them. The cursor walks right (one bit) and down (zero bit, the bottom row
// wrapping to row 0 shifted alpha columns left); each step reports the prior
// first visit of the destination, or records the current position if the
// cell is fresh. Rows store only down-step endpoints, run boundaries, the
// origin and the cursor, linked per row in column order between sentinels;
// vertical links memoise down steps and secondary links chain the carriers
// of vertical links so a fresh down step can find its insertion point
// without scanning the whole row.
class MappingMatrix {
public:
    // expected_positions sizes the record pool up front: a walk of that many
    // steps can never allocate past it, so the pool settles into one large
    // block that is also advised towards huge pages.
    explicit MappingMatrix(const Ratio& r, MatrixChecks checks = MatrixChecks::none,
                           std::size_t expected_positions = 0);

    const Ratio& ratio() const { return ratio_; }

    // Step right at stream position pos (the position of the one bit just
    // consumed). Returns the destination's prior first-visit position, or
    // nullopt when this visit is the first and pos was recorded.
    std::optional<std::int64_t> step_right(std::int64_t pos);

    // Step down at stream position pos (a zero bit), same return convention.
    std::optional<std::int64_t> step_down(std::int64_t pos);

    // Takes up to count consecutive right steps at positions pos, pos + 1, ...
    // in one cursor slide, but only while every destination is fresh and the
    // cursor stays reconstructible from its predecessor's run, i.e. while each
    // single step would have been a slide with no prior to report. Returns how
    // many steps were taken (possibly zero); callers finish the rest through
    // step_right. The record list ends up identical to single stepping.
    std::int64_t slide_right_run(std::int64_t pos, std::int64_t count);

    // Places the cursor on (row, col) the way a down step would land there,
    // but without a source cell: no vertical link is created. The matrix
    // starts with one such path at the origin; tests replay recorded walks
    // row by row with it.
    std::optional<std::int64_t> begin_path(std::int64_t row, std::int64_t col, std::int64_t pos);

    std::int64_t cursor_row() const { return rec(cursor_).row(); }
    std::int64_t cursor_col() const { return rec(cursor_).column.value(); }

    const MatrixStats& stats() const { return stats_; }
    std::size_t live_records() const { return pool_.size() - free_.size(); }
    std::uint64_t pool_peak_bytes() const { return pool_.capacity() * sizeof(CellRecord); }

    // One line per explicit record: "row column cell_value run_start", with
    // '-' for an absent value, rows in order and columns ascending.
    // Sentinels are omitted.
    std::string dump() const;

    // Audits every structural invariant (row ordering, link symmetry,
    // secondary chains, vertical targets) and, when constructed with
    // MatrixChecks::shadowed, re-derives every visited cell's first position
    // from the records and compares it against the shadow bookkeeping.
    // Throws std::logic_error naming the first violation.
    void validate() const;

private:
    CellRecord& rec(CellHandle h) { return pool_[h]; }
    const CellRecord& rec(CellHandle h) const { return pool_[h]; }

    CellHandle alloc_record();
    CellHandle insert_after(CellHandle left, std::int64_t col, std::int32_t row);
    void try_merge(CellHandle h);
    std::int32_t run_start_for(std::int64_t col, std::int64_t own_value, bool fresh,
                               CellHandle next_h) const;
    CellHandle find_pred(CellHandle from, std::int64_t col, bool count_links);
    std::optional<std::int64_t> land(CellHandle pred, std::int64_t col, std::int32_t row,
                                     std::int64_t pos, CellHandle& dest_out);
    void note_first_visit(std::int32_t row, std::int64_t col, std::int64_t pos);
    void check_revisit(std::int32_t row, std::int64_t col, std::int64_t prior) const;

    Ratio ratio_;
    std::int64_t row_count_ = 0;
    std::vector<CellRecord> pool_;
    std::vector<CellHandle> free_;
    std::vector<std::pair<CellHandle, CellHandle>> rows_; // sentinel pairs
    CellHandle cursor_ = no_cell;
    MatrixStats stats_;
    MatrixChecks checks_ = MatrixChecks::none;
    std::vector<std::map<std::int64_t, std::int64_t>> shadow_;
};

// Longest substring with density exactly alpha/beta, driven through the
// matrix m (whose ratio is used). validate_every > 0 audits the structure
// after every so-many steps.
SpanResult dist_matrix(const Bitstream& s, MappingMatrix& m, std::size_t validate_every = 0);

// Convenience form building the matrix internally; stats are copied out
// when requested.
SpanResult dist_matrix(const Bitstream& s, const Ratio& r, MatrixStats* stats = nullptr);

inline const MatrixStats& matrix_stats(const MappingMatrix& m) { return m.stats(); }

} // namespace densityseek
