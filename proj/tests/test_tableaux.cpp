#include <catch2/catch_amalgamated.hpp>

#include <lascoux/tableaux.hpp>

using namespace lascoux;

namespace {

SetValuedTableau svt(SetValuedTableau::Cells rows) {
    return SetValuedTableau::from_rows(std::move(rows));
}

// the running example: a three-row tableau with sets in most cells
const SetValuedTableau& worked_example() {
    static const SetValuedTableau t =
        svt({{{1}, {1, 3}, {3, 6}}, {{2, 3}, {4, 7}}, {{5, 6, 7}}});
    return t;
}

}  // namespace

TEST_CASE("partitions validate and measure") {
    Partition p({3, 2, 1});
    CHECK(p.rows() == 3);
    CHECK(p.part(1) == 3);
    CHECK(p.part(4) == 0);  // reads past the last row are zero
    CHECK(p.columns() == 3);
    CHECK(p.column_length(1) == 3);
    CHECK(p.column_length(3) == 1);
    CHECK(p.cells() == 6);
    CHECK(p.contains(Partition({2, 1})));
    CHECK(p.contains(p));
    CHECK_FALSE(p.contains(Partition({4})));
    CHECK_FALSE(p.contains(Partition({1, 1, 1, 1})));

    CHECK(Partition({}).rows() == 0);
    CHECK(Partition({}).columns() == 0);
    CHECK_THROWS_AS(Partition({1, 2}), error);
    CHECK_THROWS_AS(Partition({2, 0}), error);
    CHECK_THROWS_AS(Partition({-1}), error);
}

TEST_CASE("weak compositions canonicalize") {
    WeakComposition a({1, 0, 2, 0, 0});
    CHECK(a.support() == 3);  // trailing zeros are stripped
    CHECK(a == WeakComposition({1, 0, 2}));
    CHECK(a.at(2) == 0);
    CHECK(a.at(9) == 0);
    CHECK(a.sum() == 3);
    CHECK_FALSE(a.is_partition());
    CHECK(a.sorted() == Partition({2, 1}));
    CHECK(a.swapped(1) == WeakComposition({0, 1, 2}));
    CHECK(a.swapped(3) == WeakComposition({1, 0, 0, 2}));  // swaps past the support pad it
    CHECK(WeakComposition({}).support() == 0);
    CHECK(WeakComposition({2, 2, 1}).is_partition());
    CHECK_THROWS_AS(WeakComposition({1, -1}), error);
}

TEST_CASE("set-valued tableau accessors on the worked example") {
    const SetValuedTableau& t = worked_example();
    CHECK(t.shape() == Partition({3, 2, 1}));
    CHECK_FALSE(t.is_singleton());
    CHECK(t.excess() == 6);
    CHECK(t.max_entry() == 7);
    CHECK(t.weight() == WeakComposition({2, 1, 3, 1, 1, 2, 2}));
    CHECK(t.cell(1, 2) == IntegerSet({1, 3}));
    CHECK(t.entry(1, 1) == 1);
    CHECK_THROWS_AS(t.entry(2, 1), error);  // refuses multi-valued cells
    CHECK_THROWS_AS(t.cell(4, 1), index_out_of_range);
    CHECK_THROWS_AS(t.cell(1, 4), index_out_of_range);
    CHECK(t.expand().size() == 48);
    for (const auto& member : t.expand()) CHECK(member.is_singleton());
}

TEST_CASE("column word reads columns left to right, bottom to top, cells ascending") {
    CHECK(worked_example().column_word() ==
          std::vector<int>({5, 6, 7, 2, 3, 1, 4, 7, 1, 3, 3, 6}));
    CHECK(worked_example().column_word_from(2) == std::vector<int>({4, 7, 1, 3, 3, 6}));
    CHECK(worked_example().column_word_from(3) == std::vector<int>({3, 6}));
    CHECK(worked_example().column_word_from(4).empty());
}

TEST_CASE("tableau validation pinpoints the offending cell") {
    // weak rows: everything left must be <= everything right
    try {
        svt({{{2}, {1}}});
        FAIL("row violation not caught");
    } catch (const validation_error& e) {
        CHECK(e.which() == validation_error::kind::row_violation);
        CHECK(e.row() == 1);
        CHECK(e.col() == 2);
    }
    // strict columns: everything above must be < everything below
    try {
        svt({{{1}, {1}}, {{1}}});
        FAIL("column violation not caught");
    } catch (const validation_error& e) {
        CHECK(e.which() == validation_error::kind::column_violation);
        CHECK(e.row() == 2);
        CHECK(e.col() == 1);
    }
    // the rule binds the extremes of the sets, not just single entries
    CHECK_THROWS_AS(svt({{{1, 3}, {2}}}), validation_error);
    CHECK_NOTHROW(svt({{{1, 2}, {2, 5}}}));
    CHECK_THROWS_AS(svt({{{1}}, {{1, 2}}}), validation_error);
    CHECK_NOTHROW(svt({{{1}}, {{2, 3}}}));

    CHECK_THROWS_AS(svt({{{1}, {}}}), validation_error);       // empty cell
    CHECK_THROWS_AS(svt({{{0}}}), validation_error);           // entries start at 1
    CHECK_THROWS_AS(svt({{{1}}, {{2}, {3}}}), validation_error);  // ragged rows
    CHECK_THROWS_AS(SetValuedTableau(Partition({2}), {{{1}}}), validation_error);

    // duplicated values inside a cell collapse instead of erroring
    CHECK(svt({{{2, 1, 2}}}) == svt({{{1, 2}}}));
}

TEST_CASE("with_cell revalidates") {
    const SetValuedTableau& t = worked_example();
    SetValuedTableau u = t.with_cell(1, 3, {4, 9});
    CHECK(u.cell(1, 3) == IntegerSet({4, 9}));
    CHECK(t.cell(1, 3) == IntegerSet({3, 6}));  // original untouched
    // min 2 undercuts the max of the cell on its left
    CHECK_THROWS_AS(t.with_cell(1, 3, {2}), validation_error);
    // max 4 overruns the min of the cell on its right
    CHECK_THROWS_AS(t.with_cell(1, 1, {1, 4}), validation_error);
}

TEST_CASE("keys are nested tableaux") {
    // key of a composition: column j collects the rows with at least j boxes
    KeyTableau k = key_of(WeakComposition({1, 0, 3, 2}));
    CHECK(k.shape() == Partition({3, 2, 1}));
    CHECK(k.tableau() == svt({{{1}, {3}, {3}}, {{3}, {4}}, {{4}}}));
    CHECK(k.weight() == WeakComposition({1, 0, 3, 2}));
    CHECK(key_of(WeakComposition({})).shape() == Partition({}));

    // weight round trip over a sweep of compositions
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                WeakComposition alpha({a, b, c});
                CHECK(key_of(alpha).weight() == alpha);
            }

    // a non-key: column 2 holds a value missing from column 1
    CHECK_THROWS_AS(KeyTableau::from_tableau(svt({{{1}, {2}}, {{3}}})), validation_error);
    CHECK_NOTHROW(KeyTableau::from_tableau(svt({{{1}, {1}}, {{3}}})));
    CHECK_THROWS_AS(KeyTableau::from_tableau(worked_example()), validation_error);

    // column lists must weakly shrink left to right
    CHECK_THROWS_AS(KeyTableau::from_columns({{1}, {1, 2}}), validation_error);
    CHECK(KeyTableau::from_columns({{1, 3}, {3}}).tableau() ==
          svt({{{1}, {3}}, {{3}}}));
}

TEST_CASE("sorting a composition records a minimal swap word") {
    auto [lambda, word] = sort_to_partition(WeakComposition({1, 0, 2}));
    CHECK(lambda == Partition({2, 1}));
    CHECK(word == std::vector<int>({2, 1}));

    auto [l2, w2] = sort_to_partition(WeakComposition({0, 0, 1}));
    CHECK(l2 == Partition({1}));
    CHECK(w2 == std::vector<int>({2, 1}));

    CHECK(sort_to_partition(WeakComposition({2, 1})).word.empty());
    CHECK(sort_to_partition(WeakComposition({})).lambda == Partition({}));

    // property sweep: the word is minimal (one swap per inversion) and
    // applying it to the partition really lands on alpha
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c) {
                WeakComposition alpha({a, b, c});
                auto [lam, w] = sort_to_partition(alpha);
                int inversions = 0;
                std::vector<int> v{a, b, c};
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j)
                        if (v[i] < v[j]) ++inversions;
                CHECK(static_cast<int>(w.size()) == inversions);

                std::vector<int> cur = lam.as_composition().entries();
                cur.resize(4, 0);
                for (auto it = w.rbegin(); it != w.rend(); ++it)
                    std::swap(cur[*it - 1], cur[*it]);
                CHECK(WeakComposition(cur) == alpha);
            }
}

TEST_CASE("tableaux order structurally") {
    SetValuedTableau a = svt({{{1}, {1}}, {{2}}});
    SetValuedTableau b = svt({{{1}, {2}}, {{2}}});
    CHECK(a < b);
    CHECK_FALSE(b < a);
    CHECK_FALSE(a < a);
    CHECK(a == svt({{{1}, {1}}, {{2}}}));
}
