#include "densityseek/mapping_matrix.hpp"

#include <cstdint>
#include <iterator>
#include <stdexcept>

#ifdef __linux__
#include <sys/mman.h>
#endif

#include "densityseek/distance.hpp"

namespace densityseek {

namespace {

std::string cell_text(std::int64_t v, std::int64_t absent)
{
    return v == absent ? std::string("-") : std::to_string(v);
}

[[noreturn]] void fail(const std::string& what)
{
    throw std::logic_error("mapping_matrix: " + what);
}

void check_position(std::int64_t pos)
{
    if (pos < 0 || pos >= matrix_coordinate_limit)
        throw std::invalid_argument("mapping_matrix: stream position out of the supported range");
}

// Large pools sit in one block for the whole walk; huge pages cut the
// first-touch fault count and TLB pressure by orders of magnitude.
void advise_huge_pages(void* data, std::size_t bytes)
{
#ifdef __linux__
    if (bytes < (std::size_t{16} << 20))
        return;
    constexpr std::uintptr_t page = 4096;
    const auto addr = reinterpret_cast<std::uintptr_t>(data);
    const std::uintptr_t lo = (addr + page - 1) & ~(page - 1);
    const std::uintptr_t hi = (addr + bytes) & ~(page - 1);
    if (hi > lo)
        ::madvise(reinterpret_cast<void*>(lo), hi - lo, MADV_HUGEPAGE);
#else
    (void)data;
    (void)bytes;
#endif
}

} // namespace

MappingMatrix::MappingMatrix(const Ratio& r, MatrixChecks checks, std::size_t expected_positions)
    : ratio_(r), checks_(checks)
{
    if (r.extreme())
        throw std::invalid_argument("mapping_matrix: ratio must satisfy 0 < alpha < beta");
    row_count_ = r.beta - r.alpha;
    if (row_count_ > static_cast<std::int64_t>(CellRecord::row_mask))
        throw std::invalid_argument("mapping_matrix: beta - alpha exceeds the row encoding");
    if (expected_positions >= static_cast<std::size_t>(matrix_coordinate_limit))
        throw std::invalid_argument("mapping_matrix: stream too long for 32-bit coordinates");
    // A walk allocates at most one record per step beyond the sentinels and
    // the origin, so this reserve is a true upper bound: the pool never
    // regrows and untouched capacity never faults in.
    if (expected_positions > 0) {
        pool_.reserve(expected_positions + 2 * static_cast<std::size_t>(row_count_) + 2);
        advise_huge_pages(pool_.data(), pool_.capacity() * sizeof(CellRecord));
    }
    rows_.reserve(static_cast<std::size_t>(row_count_));
    if (checks_ == MatrixChecks::shadowed)
        shadow_.resize(static_cast<std::size_t>(row_count_));

    for (std::int64_t row = 0; row < row_count_; ++row) {
        const CellHandle lo = alloc_record();
        const CellHandle hi = alloc_record();
        rec(lo).column = Column::neg_infinity();
        rec(hi).column = Column::pos_infinity();
        for (const CellHandle h : {lo, hi}) {
            rec(h).set_row(static_cast<std::int32_t>(row));
            rec(h).mark_sentinel();
        }
        rec(lo).next = hi;
        rec(hi).prev = lo;
        rec(lo).secondary = hi;
        rows_.emplace_back(lo, hi);
    }
    // Sentinel vertical links chain each row to the next (bottom wraps to
    // row 0) so the first down step out of any row has a path to follow.
    for (std::int64_t row = 0; row < row_count_; ++row) {
        const std::size_t below = static_cast<std::size_t>((row + 1) % row_count_);
        rec(rows_[static_cast<std::size_t>(row)].first).vertical = rows_[below].first;
        rec(rows_[static_cast<std::size_t>(row)].second).vertical = rows_[below].second;
    }

    begin_path(0, 0, 0);
    rec(cursor_).mark_origin();
}

CellHandle MappingMatrix::alloc_record()
{
    ++stats_.cells_allocated;
    if (!free_.empty()) {
        const CellHandle h = free_.back();
        free_.pop_back();
        rec(h) = CellRecord{};
        return h;
    }
    pool_.emplace_back();
    return static_cast<CellHandle>(pool_.size() - 1);
}

CellHandle MappingMatrix::insert_after(CellHandle left, std::int64_t col, std::int32_t row)
{
    const CellHandle h = alloc_record();
    const CellHandle right = rec(left).next;
    rec(h).column = Column::finite(col);
    rec(h).set_row(row);
    rec(h).prev = left;
    rec(h).next = right;
    rec(left).next = h;
    rec(right).prev = h;
    return h;
}

std::int32_t MappingMatrix::run_start_for(std::int64_t col, std::int64_t own_value, bool fresh,
                                          CellHandle next_h) const
{
    // The stored run start always encodes the value of column col + 1 minus
    // one. When the right neighbour column holds an explicit record its value
    // wins (it may predate the run passing over it); otherwise a prior visit
    // can only continue consecutively, and fresh territory has no run yet.
    const CellRecord& nx = rec(next_h);
    if (nx.column == Column::finite(col + 1))
        return nx.cell_value - 1;
    return fresh ? no_run : static_cast<std::int32_t>(own_value);
}

void MappingMatrix::note_first_visit(std::int32_t row, std::int64_t col, std::int64_t pos)
{
    if (checks_ != MatrixChecks::shadowed)
        return;
    const auto [it, inserted] = shadow_[static_cast<std::size_t>(row)].emplace(col, pos);
    if (!inserted)
        fail("fresh visit stored over an already-visited cell");
}

void MappingMatrix::check_revisit(std::int32_t row, std::int64_t col, std::int64_t prior) const
{
    if (checks_ != MatrixChecks::shadowed)
        return;
    const auto& cells = shadow_[static_cast<std::size_t>(row)];
    const auto it = cells.find(col);
    if (it == cells.end())
        fail("revisit of a cell the shadow has never seen");
    if (it->second != prior)
        fail("revisit reported a wrong first-visit position");
}

void MappingMatrix::try_merge(CellHandle h)
{
    if (h == cursor_)
        return;
    const CellRecord& r = rec(h);
    if (r.sentinel() || r.origin() || r.entry() || r.vertical != no_cell)
        return;
    const CellRecord& p = rec(r.prev);
    if (p.run_start == no_run)
        return;
    if (p.run_start + (r.column.value() - p.column.value()) != r.cell_value)
        return;
    // Removing the record may only hand its rightward columns over to the
    // predecessor's run, so either there are none (the next record is
    // adjacent) or this cell continues its own run consecutively.
    const CellRecord& q = rec(r.next);
    if (q.column != Column::finite(r.column.value() + 1) && r.run_start != r.cell_value)
        return;
    rec(r.prev).next = r.next;
    rec(r.next).prev = r.prev;
    free_.push_back(h);
}

CellHandle MappingMatrix::find_pred(CellHandle from, std::int64_t col, bool count_links)
{
    CellHandle cur = from;
    while (rec(cur).column > Column::finite(col)) {
        cur = rec(cur).prev;
        if (count_links)
            ++stats_.walk_links_followed;
    }
    return cur;
}

std::optional<std::int64_t> MappingMatrix::land(CellHandle pred, std::int64_t col,
                                                std::int32_t row, std::int64_t pos,
                                                CellHandle& dest_out)
{
    if (rec(pred).column == Column::finite(col)) {
        dest_out = pred;
        const std::int64_t prior = rec(pred).cell_value;
        check_revisit(row, col, prior);
        return prior;
    }
    const bool covered = rec(pred).run_start != no_run;
    const std::int64_t pred_run = rec(pred).run_start;
    const std::int64_t pred_col = covered ? rec(pred).column.value() : 0;
    const bool pred_adjacent = rec(pred).column.is_finite() && rec(pred).column.value() + 1 == col;

    const CellHandle d = insert_after(pred, col, row);
    dest_out = d;
    if (covered) {
        const std::int64_t prior = pred_run + (col - pred_col);
        rec(d).cell_value = static_cast<std::int32_t>(prior);
        rec(d).run_start = run_start_for(col, prior, false, rec(d).next);
        check_revisit(row, col, prior);
        return prior;
    }
    rec(d).cell_value = static_cast<std::int32_t>(pos);
    rec(d).run_start = run_start_for(col, pos, true, rec(d).next);
    if (pred_adjacent)
        rec(pred).run_start = static_cast<std::int32_t>(pos - 1);
    note_first_visit(row, col, pos);
    return std::nullopt;
}

std::optional<std::int64_t> MappingMatrix::step_right(std::int64_t pos)
{
    check_position(pos);
    ++stats_.right_steps;
    const CellHandle xh = cursor_;
    const std::int32_t row = rec(xh).row();
    const std::int64_t dest_col = rec(xh).column.value() + 1;
    const CellHandle nh = rec(xh).next;

    if (rec(nh).column == Column::finite(dest_col)) {
        cursor_ = nh;
        const std::int64_t prior = rec(nh).cell_value;
        check_revisit(row, dest_col, prior);
        try_merge(xh);
        return prior;
    }
    if (rec(xh).run_start != no_run) {
        // Destination sits inside the cursor's run: materialise it so the
        // cursor stays an explicit record.
        const std::int64_t v = rec(xh).run_start + 1;
        const CellHandle d = insert_after(xh, dest_col, row);
        rec(d).cell_value = static_cast<std::int32_t>(v);
        rec(d).run_start = run_start_for(dest_col, v, false, rec(d).next);
        cursor_ = d;
        check_revisit(row, dest_col, v);
        try_merge(xh);
        return v;
    }
    // Fresh destination. When the cursor is unpinned and its value is
    // reconstructible from the predecessor's run, inserting the new cell and
    // merging the old cursor away reduces to sliding the cursor record one
    // column right; the resulting list is identical either way.
    {
        CellRecord& x = rec(xh);
        if (!x.entry() && !x.origin() && x.vertical == no_cell) {
            const CellRecord& p = rec(x.prev);
            if (p.run_start != no_run
                && p.run_start + (x.column.value() - p.column.value()) == x.cell_value) {
                x.column = Column::finite(dest_col);
                x.cell_value = static_cast<std::int32_t>(pos);
                x.run_start = run_start_for(dest_col, pos, true, x.next);
                note_first_visit(row, dest_col, pos);
                return std::nullopt;
            }
        }
    }
    const CellHandle d = insert_after(xh, dest_col, row);
    rec(d).cell_value = static_cast<std::int32_t>(pos);
    rec(d).run_start = run_start_for(dest_col, pos, true, rec(d).next);
    rec(xh).run_start = static_cast<std::int32_t>(pos - 1); // the run ending at the cursor grows
    cursor_ = d;
    note_first_visit(row, dest_col, pos);
    try_merge(xh);
    return std::nullopt;
}

std::int64_t MappingMatrix::slide_right_run(std::int64_t pos, std::int64_t count)
{
    if (count <= 0)
        return 0;
    check_position(pos + count - 1);
    CellRecord& x = rec(cursor_);
    if (x.entry() || x.origin() || x.vertical != no_cell || x.run_start != no_run)
        return 0;
    const CellRecord& p = rec(x.prev);
    if (p.run_start == no_run
        || p.run_start + (x.column.value() - p.column.value()) != x.cell_value)
        return 0;
    // Fresh territory reaches to the next explicit record exclusively; the
    // batch must land strictly before it so revisit reporting stays with the
    // single-step paths.
    std::int64_t batch = count;
    const CellRecord& nx = rec(x.next);
    if (nx.column.is_finite())
        batch = std::min(batch, nx.column.value() - x.column.value() - 1);
    if (batch <= 0)
        return 0;
    if (checks_ == MatrixChecks::shadowed) {
        const std::int32_t row = x.row();
        const std::int64_t from = x.column.value();
        for (std::int64_t j = 1; j <= batch; ++j)
            note_first_visit(row, from + j, pos + j - 1);
    }
    const std::int64_t dest_col = x.column.value() + batch;
    x.column = Column::finite(dest_col);
    x.cell_value = static_cast<std::int32_t>(pos + batch - 1);
    x.run_start = run_start_for(dest_col, 0, true, x.next);
    stats_.right_steps += static_cast<std::uint64_t>(batch);
    return batch;
}

std::optional<std::int64_t> MappingMatrix::step_down(std::int64_t pos)
{
    check_position(pos);
    ++stats_.down_steps;
    const CellHandle xh = cursor_;
    if (rec(xh).vertical != no_cell) {
        ++stats_.walk_links_followed;
        cursor_ = rec(xh).vertical;
        const std::int64_t prior = rec(cursor_).cell_value;
        check_revisit(rec(cursor_).row(), rec(cursor_).column.value(), prior);
        return prior;
    }

    const std::int32_t src_row = rec(xh).row();
    const std::int64_t src_col = rec(xh).column.value();
    const bool wrap = src_row == row_count_ - 1;
    const std::int32_t dest_row = wrap ? 0 : src_row + 1;
    const std::int64_t dest_col = wrap ? src_col - ratio_.alpha : src_col;

    // Walk left to the nearest vertical-link carrier, across its secondary
    // link to the nearest carrier right of the cursor, down that carrier's
    // vertical link, then left again to the insertion point. The carrier on
    // the right lands right of the destination because down steps from one
    // row shift every column equally.
    CellHandle lminus = rec(xh).prev;
    ++stats_.walk_links_followed;
    while (rec(lminus).vertical == no_cell) {
        lminus = rec(lminus).prev;
        ++stats_.walk_links_followed;
    }
    const CellHandle lplus = rec(lminus).secondary;
    ++stats_.walk_links_followed;
    const CellHandle below = rec(lplus).vertical;
    ++stats_.walk_links_followed;
    const CellHandle pred = find_pred(below, dest_col, true);

    CellHandle dest = no_cell;
    const auto prior = land(pred, dest_col, dest_row, pos, dest);
    rec(dest).mark_entry();
    rec(xh).vertical = dest;
    // Splice the new carrier into the row's secondary chain between the two
    // carriers the walk passed through.
    rec(xh).secondary = lplus;
    rec(lminus).secondary = xh;
    cursor_ = dest;
    return prior;
}

std::optional<std::int64_t> MappingMatrix::begin_path(std::int64_t row, std::int64_t col,
                                                      std::int64_t pos)
{
    if (row < 0 || row >= row_count_)
        throw std::invalid_argument("mapping_matrix: path row out of range");
    if (col <= -matrix_coordinate_limit || col >= matrix_coordinate_limit)
        throw std::invalid_argument("mapping_matrix: path column out of the supported range");
    check_position(pos);
    const CellHandle pred = find_pred(rows_[static_cast<std::size_t>(row)].second, col, false);
    CellHandle dest = no_cell;
    const auto prior = land(pred, col, static_cast<std::int32_t>(row), pos, dest);
    rec(dest).mark_entry();
    cursor_ = dest;
    return prior;
}

std::string MappingMatrix::dump() const
{
    std::string out;
    for (const auto& [lo, hi] : rows_) {
        for (CellHandle h = rec(lo).next; h != hi; h = rec(h).next) {
            const CellRecord& r = rec(h);
            out += std::to_string(r.row());
            out += ' ';
            out += std::to_string(r.column.value());
            out += ' ';
            out += cell_text(r.cell_value, no_value);
            out += ' ';
            out += cell_text(r.run_start, no_run);
            out += '\n';
        }
    }
    return out;
}

void MappingMatrix::validate() const
{
    const std::size_t limit = pool_.size() + 2;
    for (std::size_t row = 0; row < rows_.size(); ++row) {
        const auto [lo, hi] = rows_[row];
        std::size_t steps = 0;
        std::vector<CellHandle> carriers;

        for (CellHandle h = lo;; h = rec(h).next) {
            if (++steps > limit)
                fail("row list does not terminate");
            const CellRecord& r = rec(h);
            if (r.row() != static_cast<std::int32_t>(row))
                fail("record filed under the wrong row");
            if (h != lo && rec(r.prev).next != h)
                fail("prev/next links disagree");
            if (h != lo && !(rec(r.prev).column < r.column))
                fail("row columns not strictly increasing");
            if (!r.sentinel() && r.cell_value == no_value)
                fail("explicit record without a first-visit value");
            if (r.sentinel() && (r.run_start != no_run || r.cell_value != no_value))
                fail("sentinel carries cell data");
            if (r.vertical != no_cell) {
                carriers.push_back(h);
                const CellRecord& t = rec(r.vertical);
                const std::int64_t below = (static_cast<std::int64_t>(row) + 1) % row_count_;
                if (t.row() != static_cast<std::int32_t>(below))
                    fail("vertical link lands in the wrong row");
                if (r.sentinel()) {
                    if (!t.sentinel() || t.column != r.column)
                        fail("sentinel vertical link must target the matching sentinel");
                } else {
                    const bool wrap = static_cast<std::int64_t>(row) == row_count_ - 1;
                    const std::int64_t want = r.column.value() - (wrap ? ratio_.alpha : 0);
                    if (t.column != Column::finite(want))
                        fail("vertical link target column mismatch");
                    if (!t.entry())
                        fail("vertical link target not marked as an entry");
                }
            }
            if (h == hi)
                break;
        }

        // The secondary chain must thread exactly the vertical-link carriers
        // of this row, sentinels included, in column order.
        std::size_t at = 0;
        steps = 0;
        for (CellHandle h = lo;; h = rec(h).secondary) {
            if (++steps > limit)
                fail("secondary chain does not terminate");
            if (at >= carriers.size() || carriers[at] != h)
                fail("secondary chain disagrees with the vertical-link carriers");
            ++at;
            if (h == hi)
                break;
            if (rec(h).secondary == no_cell)
                fail("secondary chain broken before the sentinel");
        }
        if (at != carriers.size())
            fail("secondary chain misses a vertical-link carrier");
    }

    if (rec(cursor_).sentinel() || rec(cursor_).cell_value == no_value)
        fail("cursor must rest on an explicit visited cell");

    if (checks_ != MatrixChecks::shadowed)
        return;

    // One coordinated pass per row: shadow entries and explicit records are
    // both in column order and every record column is a visited cell, so a
    // single merge checks stored values, run bookkeeping against the entry
    // one column to the right, and run-arithmetic reconstruction of every
    // implicit cell. This runs after every step in stress tests, so it must
    // stay linear in live records plus visited cells.
    for (std::size_t row = 0; row < rows_.size(); ++row) {
        const auto& cells = shadow_[row];
        const auto [lo, hi] = rows_[row];

        CellHandle gov = lo; // rightmost record at or left of the entry
        CellHandle ahead = rec(lo).next;
        for (auto it = cells.begin(); it != cells.end(); ++it) {
            const std::int64_t col = it->first;
            const std::int64_t pos = it->second;
            if (ahead != hi && rec(ahead).column < Column::finite(col))
                fail("explicit record at a column the shadow never visited");
            if (ahead != hi && rec(ahead).column == Column::finite(col)) {
                gov = ahead;
                ahead = rec(ahead).next;
                const CellRecord& g = rec(gov);
                if (g.cell_value != pos)
                    fail("explicit record disagrees with the shadow");
                const auto right = std::next(it);
                const bool right_visited = right != cells.end() && right->first == col + 1;
                if (g.run_start == no_run) {
                    if (right_visited)
                        fail("missing run start for a visited right neighbour");
                } else if (!right_visited || right->second != g.run_start + 1) {
                    fail("run start disagrees with the right neighbour's first visit");
                }
                continue;
            }
            const CellRecord& g = rec(gov);
            if (g.sentinel())
                fail("visited cell lies before the row's first record");
            if (g.run_start == no_run || g.run_start + (col - g.column.value()) != pos)
                fail("run arithmetic fails to reconstruct a visited cell");
        }
        if (ahead != hi)
            fail("explicit record at a column the shadow never visited");
    }
}

SpanResult dist_matrix(const Bitstream& s, MappingMatrix& m, std::size_t validate_every)
{
    const Ratio r = m.ratio();
    check_distance_overflow(s.size(), r);
    const std::int64_t n = static_cast<std::int64_t>(s.size());
    if (n >= matrix_coordinate_limit)
        throw std::invalid_argument("dist_matrix: stream too long for 32-bit matrix coordinates");
    if (n == 0 || r.beta > n)
        return std::nullopt;

    Span best{};
    std::int64_t best_len = 0;
    const auto consider = [&](std::int64_t i, std::int64_t prior) {
        if (i - prior > best_len) {
            best = Span{prior + 1, i};
            best_len = best.length();
        }
    };

    if (validate_every) {
        // Audited walks advance one bit at a time so every intermediate
        // structure state is seen.
        for (std::int64_t i = 1; i <= n; ++i) {
            const auto prior =
                s.bit(static_cast<std::size_t>(i)) ? m.step_right(i) : m.step_down(i);
            if (prior)
                consider(i, *prior);
            if (static_cast<std::size_t>(i) % validate_every == 0)
                m.validate();
        }
        return best_len > 0 ? SpanResult{best} : std::nullopt;
    }

    std::int64_t i = 1;
    while (i <= n) {
        if (!s.bit(static_cast<std::size_t>(i))) {
            const auto prior = m.step_down(i);
            if (prior)
                consider(i, *prior);
            ++i;
            continue;
        }
        const auto k = static_cast<std::int64_t>(s.ones_run(static_cast<std::size_t>(i)));
        std::int64_t j = 0;
        while (j < k) {
            j += m.slide_right_run(i + j, k - j);
            if (j >= k)
                break;
            const auto prior = m.step_right(i + j);
            if (prior)
                consider(i + j, *prior);
            ++j;
        }
        i += k;
    }
    return best_len > 0 ? SpanResult{best} : std::nullopt;
}

SpanResult dist_matrix(const Bitstream& s, const Ratio& r, MatrixStats* stats)
{
    if (r.extreme())
        throw std::invalid_argument("dist_matrix: ratio must satisfy 0 < alpha < beta");
    check_distance_overflow(s.size(), r);
    if (static_cast<std::int64_t>(s.size()) >= matrix_coordinate_limit)
        throw std::invalid_argument("dist_matrix: stream too long for 32-bit matrix coordinates");
    if (s.empty() || r.beta > static_cast<std::int64_t>(s.size())) {
        if (stats)
            *stats = MatrixStats{};
        return std::nullopt;
    }
    MappingMatrix m(r, MatrixChecks::none, s.size());
    const SpanResult res = dist_matrix(s, m);
    if (stats)
        *stats = m.stats();
    return res;
}

} // namespace densityseek
