#pragma once

#include <span>
#include <vector>

#include "tableaux.hpp"

// The star action of words on sets, and right keys computed through it.
//
// A single step S * m bumps the largest element of S that is <= m up to m,
// or inserts m when every element of S exceeds m.  Folding a word through
// this action is Knuth-invariant, which is what makes the right-key formula
// below well defined on tableaux rather than on words.

namespace lascoux {

inline bool set_contains(const IntegerSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

/// Copy of s with v inserted (no-op if already present).
inline IntegerSet set_add(IntegerSet s, int v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) s.insert(it, v);
    return s;
}

/// Copy of s with v removed (no-op if absent).
inline IntegerSet set_remove(IntegerSet s, int v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it != s.end() && *it == v) s.erase(it);
    return s;
}

/// One star step: bump the largest element <= m up to m, inserting m when
/// there is none.  |result| = |s| except in the insertion case.
inline IntegerSet star_step(IntegerSet s, int m) {
    auto it = std::upper_bound(s.begin(), s.end(), m);
    if (it == s.begin()) {
        s.insert(s.begin(), m);  // nothing <= m: m joins the set
        return s;
    }
    *--it = m;  // bump m' = largest element <= m (when m' == m this is a no-op)
    // sortedness survives: the left neighbour is < m' <= m, and the right
    // neighbour exceeds m, else it would have been chosen as m'.
    return s;
}

/// Fold a word through the star action, left to right.
inline IntegerSet star_word(IntegerSet s, std::span<const int> word) {
    for (int m : word) s = star_step(std::move(s), m);
    return s;
}

/// Right key of a set-valued tableau: column j of the key is the star action
/// of the reading word of columns >= j on the empty set.  On semistandard
/// tableaux this agrees with the classical right key.
inline KeyTableau right_key_svt(const SetValuedTableau& t) {
    std::vector<IntegerSet> cols;
    for (int j = 1; j <= t.shape().columns(); ++j) {
        IntegerSet col = star_word({}, t.column_word_from(j));
        if (static_cast<int>(col.size()) != t.shape().column_length(j))
            throw error("internal: star column has wrong length");
        cols.push_back(std::move(col));
    }
    return KeyTableau::from_columns(cols);
}

/// Right key of a semistandard tableau (same star formula, but the input is
/// required to be single-valued).
inline KeyTableau right_key_ssyt(const SetValuedTableau& t) {
    if (!t.is_singleton())
        throw error("right_key_ssyt needs a single-valued tableau");
    return right_key_svt(t);
}

/// Entrywise comparison of two keys of equal shape.
inline bool key_leq(const KeyTableau& a, const KeyTableau& b) {
    if (a.shape() != b.shape())
        throw shape_mismatch("key comparison requires equal shapes");
    for (int r = 1; r <= a.shape().rows(); ++r)
        for (int c = 1; c <= a.shape().part(r); ++c)
            if (a.entry(r, c) > b.entry(r, c)) return false;
    return true;
}

/// Entrywise maximum of two keys of equal shape.  The result of maximizing
/// over the expansions of a set-valued tableau is again a key.
/// Independent right-key route: expand the tableau into its semistandard
/// members and take the entrywise maximum of their right keys.  Slow but
/// definitionally direct; used to cross-check right_key_svt.
inline KeyTableau right_key_oracle(const SetValuedTableau& t,
                                   long long max_expansions = 100000) {
    long long count = 1;
    for (int r = 1; r <= t.rows(); ++r)
        for (int c = 1; c <= t.row_length(r); ++c) {
            count *= static_cast<long long>(t.cell(r, c).size());
            if (count > max_expansions)
                throw oracle_guard("right_key_oracle: too many expansions");
        }
    // maxima are collected raw and shaped into a key only at the end: the
    // partial maximum of two keys need not nest, the full maximum does
    std::vector<IntegerSet> cols;
    bool first = true;
    for (const auto& member : t.expand()) {
        KeyTableau k = right_key_ssyt(member);
        if (first) {
            cols.resize(k.shape().columns());
            for (int c = 1; c <= k.shape().columns(); ++c)
                for (int r = 1; r <= k.shape().column_length(c); ++r)
                    cols[c - 1].push_back(k.entry(r, c));
            first = false;
            continue;
        }
        for (int c = 1; c <= k.shape().columns(); ++c)
            for (int r = 1; r <= k.shape().column_length(c); ++r)
                cols[c - 1][r - 1] = std::max(cols[c - 1][r - 1], k.entry(r, c));
    }
    return KeyTableau::from_columns(cols);
}

/// Membership in the set-valued family attached to alpha: correct shape and
/// right key entrywise at most key(alpha).
inline bool in_svt(const SetValuedTableau& t, const WeakComposition& alpha) {
    if (t.shape() != alpha.sorted()) return false;
    return key_leq(right_key_svt(t), key_of(alpha));
}

/// Membership in the atom attached to alpha: right key exactly key(alpha).
inline bool in_atom(const SetValuedTableau& t, const WeakComposition& alpha) {
    if (t.shape() != alpha.sorted()) return false;
    return right_key_svt(t) == key_of(alpha);
}

}  // namespace lascoux
