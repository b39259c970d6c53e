#pragma once

#include <bit>
#include <climits>
#include <optional>
#include <set>
#include <vector>

#include "iword.hpp"
#include "starkeys.hpp"
#include "tableaux.hpp"

// Crystal operators on set-valued tableaux.
//
// The square-root operators f', e' act on the i-word of a tableau:
//
//   f':  a combined form turns into a left form   ")-(u)-(" -> "(u)-("   by
//        deleting i from the cell of the leading ")-(" token; otherwise the
//        last right form turns into a combined form  ")-(u)" -> ")-(u)-("
//        by adding i+1 to the cell of its final ")" token; otherwise bottom.
//
//   e':  a combined form turns into a right form  ")-(u)-(" -> ")-(u)"  by
//        deleting i+1 from the cell of the trailing ")-(" token; otherwise
//        the first left form turns into a combined form "(u)-(" -> ")-(u)-("
//        by adding i to the cell of its leading "(" token; otherwise bottom.
//
// (e' must target the *first* left form: f' turns the combined form into the
// left form preceding all others, and e' has to undo exactly that.)
//
// The full operators satisfy f = f'∘f' and e = e'∘e'; they are implemented
// independently as single-pass word rewrites, and the composition identity is
// left to the test suite as a genuine two-route check.  Bottom is represented
// by std::nullopt throughout, and every operator maps bottom to bottom.

namespace lascoux {

/// Tokens contributed by cells meeting {i, i+1}, in column reading order.
inline IWord i_word(const SetValuedTableau& t, int i) {
    if (i < 1) throw index_out_of_range("crystal index must be >= 1");
    IWord w;
    for (int c = 1; c <= t.shape().columns(); ++c)
        for (int r = t.shape().column_length(c); r >= 1; --r) {
            const IntegerSet& s = t.cell(r, c);
            bool low = set_contains(s, i), high = set_contains(s, i + 1);
            if (!low && !high) continue;
            w.tokens.push_back(low && high ? IToken::both
                               : low       ? IToken::right
                                           : IToken::left);
            w.origins.push_back({r, c});
        }
    return w;
}

/// Number of left forms in the i-word.
inline int epsilon(const SetValuedTableau& t, int i) {
    return decompose_forms(i_word(t, i)).epsilon;
}

/// Number of right forms in the i-word.
inline int phi(const SetValuedTableau& t, int i) {
    return decompose_forms(i_word(t, i)).phi;
}

namespace detail {

inline const CellRef& origin_of(const IWord& w, int token, IToken expect,
                                const char* who) {
    if (w.tokens[token] != expect)
        throw error(std::string("internal: unexpected token kind in ") + who);
    return w.origins[token];
}

inline SetValuedTableau edit(const SetValuedTableau& t, const CellRef& at,
                             int remove, int add) {
    IntegerSet s = t.cell(at.row, at.col);
    if (remove) s = set_remove(std::move(s), remove);
    if (add) s = set_add(std::move(s), add);
    return t.with_cell(at.row, at.col, std::move(s));
}

}  // namespace detail

inline std::optional<SetValuedTableau> f_prime(const SetValuedTableau& t, int i) {
    IWord w = i_word(t, i);
    FormDecomposition d = decompose_forms(w);
    if (d.has_combined()) {
        const FormClass& cls = d.classes[d.combined];
        const CellRef& at = detail::origin_of(w, cls.first_token, IToken::both, "f'");
        return detail::edit(t, at, i, 0);
    }
    if (d.phi > 0) {
        const FormClass& cls = d.classes[d.last_right];
        const CellRef& at = detail::origin_of(w, cls.last_token, IToken::right, "f'");
        return detail::edit(t, at, 0, i + 1);
    }
    return std::nullopt;
}

inline std::optional<SetValuedTableau> e_prime(const SetValuedTableau& t, int i) {
    IWord w = i_word(t, i);
    FormDecomposition d = decompose_forms(w);
    if (d.has_combined()) {
        const FormClass& cls = d.classes[d.combined];
        const CellRef& at = detail::origin_of(w, cls.last_token, IToken::both, "e'");
        return detail::edit(t, at, i + 1, 0);
    }
    if (d.epsilon > 0) {
        const FormClass& cls = d.classes[d.first_left];
        const CellRef& at = detail::origin_of(w, cls.first_token, IToken::left, "e'");
        return detail::edit(t, at, 0, i);
    }
    return std::nullopt;
}

/// Full lowering operator, as a direct word rewrite: the combined form (if
/// any) becomes a left form and the last right form becomes a combined form;
/// with no combined form the last right form becomes a left form.  Undefined
/// exactly when there is no right form.
inline std::optional<SetValuedTableau> f(const SetValuedTableau& t, int i) {
    IWord w = i_word(t, i);
    FormDecomposition d = decompose_forms(w);
    if (d.phi == 0) return std::nullopt;
    const FormClass& right = d.classes[d.last_right];
    if (d.has_combined()) {
        const FormClass& comb = d.classes[d.combined];
        SetValuedTableau out = detail::edit(
            t, detail::origin_of(w, comb.first_token, IToken::both, "f"), i, 0);
        return detail::edit(
            out, detail::origin_of(w, right.last_token, IToken::right, "f"), 0, i + 1);
    }
    if (right.first_token == right.last_token) {
        // ")" -> "(": the cell trades its i for an i+1
        const CellRef& at = detail::origin_of(w, right.first_token, IToken::right, "f");
        return detail::edit(t, at, i, i + 1);
    }
    // ")-(u)" -> "(u)-(": leading ")-(" loses its i, final ")" gains an i+1
    SetValuedTableau out = detail::edit(
        t, detail::origin_of(w, right.first_token, IToken::both, "f"), i, 0);
    return detail::edit(
        out, detail::origin_of(w, right.last_token, IToken::right, "f"), 0, i + 1);
}

/// Full raising operator, mirror of f.  Undefined exactly when there is no
/// left form.
inline std::optional<SetValuedTableau> e(const SetValuedTableau& t, int i) {
    IWord w = i_word(t, i);
    FormDecomposition d = decompose_forms(w);
    if (d.epsilon == 0) return std::nullopt;
    const FormClass& left = d.classes[d.first_left];
    if (d.has_combined()) {
        const FormClass& comb = d.classes[d.combined];
        SetValuedTableau out = detail::edit(
            t, detail::origin_of(w, comb.last_token, IToken::both, "e"), i + 1, 0);
        return detail::edit(
            out, detail::origin_of(w, left.first_token, IToken::left, "e"), 0, i);
    }
    if (left.first_token == left.last_token) {
        // "(" -> ")": the cell trades its i+1 for an i
        const CellRef& at = detail::origin_of(w, left.first_token, IToken::left, "e");
        return detail::edit(t, at, i + 1, i);
    }
    // "(u)-(" -> ")-(u)": leading "(" gains an i, trailing ")-(" loses its i+1
    SetValuedTableau out = detail::edit(
        t, detail::origin_of(w, left.first_token, IToken::left, "e"), 0, i);
    return detail::edit(
        out, detail::origin_of(w, left.last_token, IToken::both, "e"), i + 1, 0);
}

// bottom-propagating overloads: every operator maps bottom to bottom
inline std::optional<SetValuedTableau> f_prime(const std::optional<SetValuedTableau>& t, int i) {
    return t ? f_prime(*t, i) : std::nullopt;
}
inline std::optional<SetValuedTableau> e_prime(const std::optional<SetValuedTableau>& t, int i) {
    return t ? e_prime(*t, i) : std::nullopt;
}
inline std::optional<SetValuedTableau> f(const std::optional<SetValuedTableau>& t, int i) {
    return t ? f(*t, i) : std::nullopt;
}
inline std::optional<SetValuedTableau> e(const std::optional<SetValuedTableau>& t, int i) {
    return t ? e(*t, i) : std::nullopt;
}

/// The full double i-string through t: walk e' back to the source, then f'
/// forward to the end.  Always has odd length; its even positions form the
/// classical i-string.
inline std::vector<SetValuedTableau> double_string(const SetValuedTableau& t, int i) {
    SetValuedTableau cur = t;
    while (auto prev = e_prime(cur, i)) cur = *prev;
    std::vector<SetValuedTableau> out{cur};
    while (auto next = f_prime(out.back(), i)) out.push_back(*next);
    return out;
}

/// The classical i-string through t (under e and f).
inline std::vector<SetValuedTableau> i_string(const SetValuedTableau& t, int i) {
    SetValuedTableau cur = t;
    while (auto prev = e(cur, i)) cur = *prev;
    std::vector<SetValuedTableau> out{cur};
    while (auto next = f(out.back(), i)) out.push_back(*next);
    return out;
}

using TableauSet = std::set<SetValuedTableau>;

namespace detail {

/// Closure of a set under repeated application of a partial operator.
/// The revisit check makes the loop safe even for operators without the
/// usual strictly-monotone weight behaviour (used by fault injection).
template <typename Op>
TableauSet closure(const TableauSet& s, int i, Op&& op) {
    TableauSet out;
    for (const SetValuedTableau& t : s) {
        SetValuedTableau cur = t;
        out.insert(cur);
        while (auto next = op(cur, i)) {
            cur = *next;
            if (!out.insert(cur).second) break;
        }
    }
    return out;
}

}  // namespace detail

/// Closure under the full lowering operator f_i.
inline TableauSet f_closure(const TableauSet& s, int i) {
    return detail::closure(s, i, [](const SetValuedTableau& t, int j) { return f(t, j); });
}

/// Closure under the square-root lowering operator f'_i.
inline TableauSet f_prime_closure(const TableauSet& s, int i) {
    return detail::closure(s, i, [](const SetValuedTableau& t, int j) { return f_prime(t, j); });
}

/// Highest-weight tableau of shape lambda: row r filled with r.
inline SetValuedTableau highest_weight_tableau(const Partition& lambda) {
    std::vector<std::vector<int>> rows(lambda.rows());
    for (int r = 1; r <= lambda.rows(); ++r)
        rows[r - 1].assign(lambda.part(r), r);
    return SetValuedTableau::from_entries(rows);
}

namespace detail {

template <typename Closure>
TableauSet generate_from_highest(const WeakComposition& alpha, Closure&& close) {
    auto [lambda, word] = sort_to_partition(alpha);
    TableauSet out{highest_weight_tableau(lambda)};
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = close(out, *it);
    return out;
}

}  // namespace detail

/// All semistandard members attached to alpha, generated along a minimal
/// sorting word by f-closures from the highest-weight tableau.
inline TableauSet generate_ssyt(const WeakComposition& alpha) {
    return detail::generate_from_highest(alpha, [](const TableauSet& s, int i) {
        return f_closure(s, i);
    });
}

/// All set-valued members attached to alpha, generated along the same word
/// by f'-closures.
inline TableauSet generate_svt(const WeakComposition& alpha) {
    return detail::generate_from_highest(alpha, [](const TableauSet& s, int i) {
        return f_prime_closure(s, i);
    });
}

/// Every set-valued tableau of the given shape with entries in {1..n},
/// enumerated by column-major backtracking.  Cells may optionally be capped
/// in size.  Throws once more than max_results tableaux exist.
inline TableauSet generate_Bn(const Partition& shape, int n,
                              long long max_results = 10000000,
                              int max_cell_size = INT_MAX) {
    if (shape.rows() > n)
        throw infeasible_shape("columns cannot increase strictly past n");
    std::vector<CellRef> order;
    for (int c = 1; c <= shape.columns(); ++c)
        for (int r = 1; r <= shape.column_length(c); ++r) order.push_back({r, c});

    SetValuedTableau::Cells cells(shape.rows());
    for (int r = 1; r <= shape.rows(); ++r) cells[r - 1].resize(shape.part(r));

    TableauSet out;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            if (static_cast<long long>(out.size()) >= max_results)
                throw size_guard_exceeded("tableau enumeration exceeds its bound");
            out.insert(SetValuedTableau(shape, cells));
            return;
        }
        auto [r, c] = order[k];
        int lo = 1;
        if (c > 1) lo = std::max(lo, cells[r - 1][c - 2].back());       // weak row step
        if (r > 1) lo = std::max(lo, cells[r - 2][c - 1].back() + 1);   // strict column step
        if (lo > n) return;
        const int width = n - lo + 1;
        for (unsigned mask = 1; mask < (1u << width); ++mask) {
            if (std::popcount(mask) > max_cell_size) continue;
            IntegerSet s;
            for (int b = 0; b < width; ++b)
                if (mask & (1u << b)) s.push_back(lo + b);
            cells[r - 1][c - 1] = std::move(s);
            self(self, k + 1);
        }
        cells[r - 1][c - 1].clear();
    };
    rec(rec, 0);
    return out;
}

}  // namespace lascoux
