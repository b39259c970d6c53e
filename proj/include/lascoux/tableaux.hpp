#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "errors.hpp"

// Core combinatorial value types: weak compositions, partitions, set-valued
// tableaux and key tableaux.  Everything is immutable after construction and
// validated on construction.  All row/column/entry indexing in the public API
// is 1-based, matching the usual combinatorial conventions; storage is 0-based.

namespace lascoux {

/// A cell's content: distinct positive integers, kept sorted ascending.
using IntegerSet = std::vector<int>;

/// Position of a cell, 1-based, row 1 at the top.
struct CellRef {
    int row = 0;
    int col = 0;
    auto operator<=>(const CellRef&) const = default;
};

class WeakComposition;

/// A partition: weakly decreasing positive parts.  Row r has part(r) cells.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t r = 0; r < parts_.size(); ++r) {
            if (parts_[r] <= 0)
                throw validation_error(validation_error::kind::ragged_shape,
                                       static_cast<int>(r + 1), 0,
                                       "partition parts must be positive");
            if (r > 0 && parts_[r] > parts_[r - 1])
                throw validation_error(validation_error::kind::ragged_shape,
                                       static_cast<int>(r + 1), 0,
                                       "partition parts must be weakly decreasing");
        }
    }

    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Length of row r; 0 when r is past the last row.
    int part(int r) const {
        return (r >= 1 && r <= rows()) ? parts_[r - 1] : 0;
    }

    int columns() const { return parts_.empty() ? 0 : parts_[0]; }

    /// Number of rows whose length is at least c (the conjugate part).
    int column_length(int c) const {
        int len = 0;
        while (len < rows() && parts_[len] >= c) ++len;
        return len;
    }

    /// Total number of cells.
    int cells() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Containment of Young diagrams: every row of `inner` fits inside ours.
    bool contains(const Partition& inner) const {
        if (inner.rows() > rows()) return false;
        for (int r = 1; r <= inner.rows(); ++r)
            if (inner.part(r) > part(r)) return false;
        return true;
    }

    const std::vector<int>& parts() const { return parts_; }

    WeakComposition as_composition() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// A weak composition: finitely many non-negative entries, canonicalized by
/// stripping trailing zeros.  Entry access is total: at(i) = 0 past the end.
class WeakComposition {
public:
    WeakComposition() = default;
    WeakComposition(std::initializer_list<int> e) : WeakComposition(std::vector<int>(e)) {}

    explicit WeakComposition(std::vector<int> e) : entries_(std::move(e)) {
        for (int v : entries_)
            if (v < 0) throw error("composition entries must be non-negative");
        while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
    }

    /// i-th entry, 1-based; zero beyond the stored support.
    int at(int i) const {
        return (i >= 1 && i <= support()) ? entries_[i - 1] : 0;
    }

    /// Index of the last nonzero entry (0 for the empty composition).
    int support() const { return static_cast<int>(entries_.size()); }

    int sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

    bool is_partition() const {
        return std::is_sorted(entries_.begin(), entries_.end(), std::greater<int>());
    }

    /// The partition obtained by sorting the entries weakly decreasing.
    Partition sorted() const {
        std::vector<int> v = entries_;
        std::sort(v.begin(), v.end(), std::greater<int>());
        while (!v.empty() && v.back() == 0) v.pop_back();
        return Partition(std::move(v));
    }

    /// The composition with entries i and i+1 exchanged (i >= 1).
    WeakComposition swapped(int i) const {
        if (i < 1) throw index_out_of_range("swap position must be >= 1");
        std::vector<int> v = entries_;
        if (static_cast<int>(v.size()) < i + 1) v.resize(i + 1, 0);
        std::swap(v[i - 1], v[i]);
        return WeakComposition(std::move(v));
    }

    const std::vector<int>& entries() const { return entries_; }

    auto operator<=>(const WeakComposition&) const = default;

private:
    std::vector<int> entries_;
};

inline WeakComposition Partition::as_composition() const {
    return WeakComposition(parts_);
}

/// A set-valued tableau of partition shape: every cell holds a non-empty set
/// of positive integers; picking any single element per cell must always give
/// a semistandard tableau.  Cellwise that means
///   max(cell) <= min(right neighbour)   and   max(cell) < min(lower neighbour).
class SetValuedTableau {
public:
    using Cells = std::vector<std::vector<IntegerSet>>;

    SetValuedTableau() = default;  // the empty tableau

    SetValuedTableau(Partition shape, Cells cells)
        : shape_(std::move(shape)), cells_(std::move(cells)) {
        canonicalize_cells();
        validate();
    }

    /// Build from rows of cell sets, deducing the shape from the row lengths.
    static SetValuedTableau from_rows(Cells rows) {
        std::vector<int> parts;
        parts.reserve(rows.size());
        for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
        return SetValuedTableau(Partition(std::move(parts)), std::move(rows));
    }

    /// Build a semistandard tableau from rows of single entries.
    static SetValuedTableau from_entries(const std::vector<std::vector<int>>& rows) {
        Cells cells(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int v : rows[r]) cells[r].push_back({v});
        return from_rows(std::move(cells));
    }

    const Partition& shape() const { return shape_; }
    int rows() const { return shape_.rows(); }
    int row_length(int r) const { return shape_.part(r); }

    const IntegerSet& cell(int r, int c) const {
        if (r < 1 || r > rows() || c < 1 || c > row_length(r))
            throw index_out_of_range("cell index outside shape");
        return cells_[r - 1][c - 1];
    }

    /// Total count of surplus values, sum of (|cell| - 1); zero iff semistandard.
    int excess() const {
        int total = 0;
        for (const auto& row : cells_)
            for (const auto& s : row) total += static_cast<int>(s.size()) - 1;
        return total;
    }

    bool is_singleton() const { return excess() == 0; }

    /// Sole element of a singleton cell.
    int entry(int r, int c) const {
        const IntegerSet& s = cell(r, c);
        if (s.size() != 1) throw error("entry() called on a multi-valued cell");
        return s.front();
    }

    /// Multiplicity vector: entry i counts occurrences of i over all cells.
    WeakComposition weight() const {
        std::vector<int> counts;
        for (const auto& row : cells_)
            for (const auto& s : row)
                for (int v : s) {
                    if (static_cast<int>(counts.size()) < v) counts.resize(v, 0);
                    ++counts[v - 1];
                }
        return WeakComposition(std::move(counts));
    }

    int max_entry() const {
        int m = 0;
        for (const auto& row : cells_)
            for (const auto& s : row)
                if (!s.empty()) m = std::max(m, s.back());
        return m;
    }

    /// Column reading word: columns left to right, each column bottom to top,
    /// each cell's values in increasing order.
    std::vector<int> column_word() const { return column_word_from(1); }

    /// Reading word of the tableau restricted to columns >= j.
    std::vector<int> column_word_from(int j) const {
        std::vector<int> w;
        for (int c = std::max(j, 1); c <= shape_.columns(); ++c)
            for (int r = shape_.column_length(c); r >= 1; --r)
                for (int v : cells_[r - 1][c - 1]) w.push_back(v);
        return w;
    }

    /// All semistandard tableaux obtained by picking one value per cell.
    std::vector<SetValuedTableau> expand() const {
        std::vector<const IntegerSet*> slots;
        for (const auto& row : cells_)
            for (const auto& s : row) slots.push_back(&s);
        std::vector<std::size_t> pick(slots.size(), 0);
        std::vector<SetValuedTableau> out;
        while (true) {
            Cells chosen(cells_.size());
            std::size_t k = 0;
            for (std::size_t r = 0; r < cells_.size(); ++r)
                for (std::size_t c = 0; c < cells_[r].size(); ++c, ++k)
                    chosen[r].push_back({(*slots[k])[pick[k]]});
            out.emplace_back(shape_, std::move(chosen));
            // odometer increment
            std::size_t k2 = 0;
            while (k2 < slots.size() && ++pick[k2] == slots[k2]->size()) pick[k2++] = 0;
            if (k2 == slots.size()) break;
        }
        return out;
    }

    /// Copy with one cell replaced (re-validated).
    SetValuedTableau with_cell(int r, int c, IntegerSet s) const {
        cell(r, c);  // bounds check
        Cells cells = cells_;
        cells[r - 1][c - 1] = std::move(s);
        return SetValuedTableau(shape_, std::move(cells));
    }

    const Cells& cells() const { return cells_; }

    bool operator==(const SetValuedTableau&) const = default;

    /// Structural order (shape, then cells lexicographically); used for sets.
    bool operator<(const SetValuedTableau& o) const {
        if (shape_ != o.shape_) return shape_.parts() < o.shape_.parts();
        return cells_ < o.cells_;
    }

private:
    Partition shape_;
    Cells cells_;

    void canonicalize_cells() {
        for (auto& row : cells_)
            for (auto& s : row) {
                std::sort(s.begin(), s.end());
                s.erase(std::unique(s.begin(), s.end()), s.end());
            }
    }

    void validate() {
        using k = validation_error::kind;
        if (static_cast<int>(cells_.size()) != shape_.rows())
            throw validation_error(k::ragged_shape, 0, 0, "row count does not match shape");
        for (int r = 1; r <= rows(); ++r) {
            if (static_cast<int>(cells_[r - 1].size()) != shape_.part(r))
                throw validation_error(k::ragged_shape, r, 0, "row length does not match shape");
            for (int c = 1; c <= shape_.part(r); ++c) {
                const IntegerSet& s = cells_[r - 1][c - 1];
                if (s.empty())
                    throw validation_error(k::empty_cell, r, c, "empty cell");
                if (s.front() < 1)
                    throw validation_error(k::bad_entry, r, c, "entries must be >= 1");
                if (c > 1 && cells_[r - 1][c - 2].back() > s.front())
                    throw validation_error(k::row_violation, r, c,
                                           "row must be weakly increasing across cells");
                if (r > 1 && cells_[r - 2][c - 1].back() >= s.front())
                    throw validation_error(k::column_violation, r, c,
                                           "column must be strictly increasing across cells");
            }
        }
    }
};

/// A key tableau: a semistandard tableau whose column sets are nested,
/// column j+1 contained in column j.  Keys are exactly the tableaux of the
/// form key(alpha) below, and serve as the values of the right-key map.
class KeyTableau {
public:
    KeyTableau() = default;

    static KeyTableau from_tableau(SetValuedTableau t) {
        check_is_key(t);
        return KeyTableau(std::move(t));
    }

    /// Build from column sets (column j a set of row entries, top to bottom).
    static KeyTableau from_columns(const std::vector<IntegerSet>& cols) {
        std::size_t nrows = 0;
        for (const auto& col : cols) nrows = std::max(nrows, col.size());
        SetValuedTableau::Cells rows(nrows);
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = 0; r < cols[c].size(); ++r) {
                if (rows[r].size() != c)  // columns must weakly shorten left to right
                    throw validation_error(validation_error::kind::not_a_key,
                                           static_cast<int>(r + 1), static_cast<int>(c + 1),
                                           "column lengths must be weakly decreasing");
                rows[r].push_back({cols[c][r]});
            }
        return from_tableau(SetValuedTableau::from_rows(std::move(rows)));
    }

    const SetValuedTableau& tableau() const { return t_; }
    const Partition& shape() const { return t_.shape(); }
    int entry(int r, int c) const { return t_.entry(r, c); }
    WeakComposition weight() const { return t_.weight(); }

    bool operator==(const KeyTableau&) const = default;
    bool operator<(const KeyTableau& o) const { return t_ < o.t_; }

private:
    explicit KeyTableau(SetValuedTableau t) : t_(std::move(t)) {}

    static void check_is_key(const SetValuedTableau& t) {
        using k = validation_error::kind;
        if (!t.is_singleton())
            throw validation_error(k::not_a_key, 0, 0, "key tableaux are single-valued");
        for (int c = 2; c <= t.shape().columns(); ++c) {
            // every entry of column c must appear in column c-1
            for (int r = 1; r <= t.shape().column_length(c); ++r) {
                int v = t.entry(r, c);
                bool found = false;
                for (int r2 = 1; r2 <= t.shape().column_length(c - 1) && !found; ++r2)
                    found = (t.entry(r2, c - 1) == v);
                if (!found)
                    throw validation_error(k::not_a_key, r, c,
                                           "key columns must be nested right-to-left");
            }
        }
    }

    SetValuedTableau t_;
};

/// key(alpha): the key tableau whose j-th column is { i : alpha_i >= j }.
/// Its shape is the sorted partition of alpha and its weight is alpha.
inline KeyTableau key_of(const WeakComposition& alpha) {
    int width = 0;
    for (int i = 1; i <= alpha.support(); ++i) width = std::max(width, alpha.at(i));
    std::vector<IntegerSet> cols(width);
    for (int j = 1; j <= width; ++j)
        for (int i = 1; i <= alpha.support(); ++i)
            if (alpha.at(i) >= j) cols[j - 1].push_back(i);
    return KeyTableau::from_columns(cols);
}

struct SortToPartitionResult {
    Partition lambda;       // the sorted entries
    std::vector<int> word;  // alpha = s_{word[0]} s_{word[1]} ... s_{word[k-1]} lambda
};

/// Sort alpha to its underlying partition, recording a minimal sequence of
/// adjacent swaps.  Strategy: repeatedly swap at the leftmost ascent.  The
/// word drives both the polynomial recursions and the crystal generation,
/// applied right to left starting from the partition.
inline SortToPartitionResult sort_to_partition(const WeakComposition& alpha) {
    std::vector<int> cur = alpha.entries();
    std::vector<int> word;
    while (true) {
        int i = 0;  // leftmost ascent, 1-based; 0 = already sorted
        for (int p = 1; p + 1 <= static_cast<int>(cur.size()); ++p)
            if (cur[p - 1] < cur[p]) { i = p; break; }
        if (i == 0) break;
        std::swap(cur[i - 1], cur[i]);
        word.push_back(i);
    }
    while (!cur.empty() && cur.back() == 0) cur.pop_back();
    return {Partition(std::move(cur)), std::move(word)};
}

}  // namespace lascoux
