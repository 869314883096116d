#include "doctest.h"
#include "immaculate/hecke.hpp"
#include "immaculate/verify.hpp"

using namespace imm;

namespace {

Tableau make(std::vector<int> outer, std::vector<int> inner,
             std::vector<std::vector<int>> rows) {
    return Tableau(SkewShape(Composition(std::move(outer)), Composition(std::move(inner))),
                   std::move(rows));
}

// Relative placement of i and i+1: above/below refer to rows.
enum class Rel { StrictlyAbove, SameRow, StrictlyBelow };

Rel relation(const Tableau& t, int i) {
    const int r = t.row_of(i), s = t.row_of(i + 1);
    if (s > r) return Rel::StrictlyAbove;
    if (s == r) return Rel::SameRow;
    return Rel::StrictlyBelow;
}

bool both_in_first_column(const Tableau& t, int i) {
    return t.cell_of(i).col == 1 && t.cell_of(i + 1).col == 1;
}

}  // namespace

TEST_CASE("apply on reference tableaux") {
    const SkewShape shape(Composition({2, 3, 2}), Composition({1, 2, 1}));
    const Tableau t1 = make({2, 3, 2}, {1, 2, 1}, {{2}, {1}, {3}});
    const Tableau t2 = srow(shape);

    HeckeResult r = apply(DescentKind::RowStrict, 2, scol(shape));
    REQUIRE(r.tag == HeckeTag::Swapped);
    CHECK(*r.tableau == t2);
    r = apply(DescentKind::RowStrict, 1, t1);
    REQUIRE(r.tag == HeckeTag::Swapped);
    CHECK(*r.tableau == t2);

    const SkewShape flat(Composition({2, 3}), Composition({1, 2}));
    const Tableau u = make({2, 3}, {1, 2}, {{2}, {1}});
    r = apply(DescentKind::RowStrict, 1, u);
    REQUIRE(r.tag == HeckeTag::Swapped);
    CHECK(*r.tableau == srow(flat));
    CHECK(*r.tableau == scol(flat));

    // Not a descent: fixed.
    r = apply(DescentKind::RowStrict, 1, srow(flat));
    CHECK(r.tag == HeckeTag::Fixed);
    CHECK(*r.tableau == srow(flat));

    CHECK_THROWS_AS(apply(DescentKind::RowStrict, 5, u), std::out_of_range);
}

TEST_CASE("apply validates its input") {
    const Tableau bad = Tableau(SkewShape(Composition({2, 2})), {{2, 3}, {1, 4}});
    CHECK_THROWS_AS(apply(DescentKind::RowStrict, 1, bad), std::invalid_argument);
    CHECK_THROWS_AS(Tableau(SkewShape(Composition({2, 2})), {{1, 2, 3}, {4}}),
                    std::invalid_argument);
}

TEST_CASE("the skew action matches the embedded straight action up to n = 6") {
    for (const SkewShape& shape : all_skew_shapes(6)) {
        if (shape.inner().empty()) continue;
        const int m = shape.inner().size();
        for (const Tableau& t : generate_sit(shape)) {
            const Tableau image = phi(t);
            for (DescentKind kind : kAllDescentKinds)
                for (int i = 1; i <= t.size() - 1; ++i) {
                    const HeckeResult skew = apply(kind, i, t);
                    const HeckeResult straight = apply(kind, i + m, image);
                    REQUIRE(skew.tag == straight.tag);
                    if (skew.tag == HeckeTag::Swapped)
                        CHECK(phi(*skew.tableau) == *straight.tableau);
                }
        }
    }
}

TEST_CASE("case table for the four actions up to n = 7") {
    for (const SkewShape& shape : all_skew_shapes(7))
        for (const Tableau& t : generate_sit(shape))
            for (int i = 1; i <= t.size() - 1; ++i) {
                const Rel rel = relation(t, i);
                const bool first_col = both_in_first_column(t, i);

                const HeckeResult rdi = apply(DescentKind::RowStrict, i, t);
                CHECK((rdi.tag == HeckeTag::Fixed) == (rel == Rel::StrictlyAbove));
                CHECK((rdi.tag == HeckeTag::Zero) == (rel == Rel::SameRow));

                const HeckeResult di = apply(DescentKind::DualImmaculate, i, t);
                CHECK((di.tag == HeckeTag::Zero) == (rel == Rel::StrictlyAbove && first_col));
                CHECK((di.tag == HeckeTag::Fixed) ==
                      (rel == Rel::SameRow || rel == Rel::StrictlyBelow));

                const HeckeResult astar = apply(DescentKind::AStar, i, t);
                CHECK(astar.tag != HeckeTag::Zero);
                CHECK((astar.tag == HeckeTag::Swapped) == (rel == Rel::StrictlyBelow));

                const HeckeResult abar = apply(DescentKind::ABarStar, i, t);
                CHECK((abar.tag == HeckeTag::Zero) ==
                      (rel == Rel::SameRow || (rel == Rel::StrictlyAbove && first_col)));
                CHECK((abar.tag == HeckeTag::Fixed) == (rel == Rel::StrictlyBelow));
            }
}

TEST_CASE("apply_word folds right to left") {
    const SkewShape shape(Composition({4, 3, 4, 2, 3}), Composition({2, 1, 2}));
    const Tableau target =
        make({4, 3, 4, 2, 3}, {2, 1, 2}, {{2, 7}, {1, 9}, {6, 11}, {3, 4}, {5, 8, 10}});
    const GeneratorWord chain{{2, 1, 4, 3, 2, 7, 6, 5, 4, 3, 9, 8, 7, 6, 5, 4,
                               6, 5, 7, 6, 10, 9, 8, 7, 10, 9}};
    HeckeResult r = apply_word(DescentKind::RowStrict, chain, s0(shape));
    REQUIRE(r.tag == HeckeTag::Swapped);
    CHECK(*r.tableau == target);

    r = apply_word(DescentKind::RowStrict, GeneratorWord{}, target);
    CHECK(r.tag == HeckeTag::Fixed);
    CHECK(*r.tableau == target);

    const SkewShape shape2(Composition({4, 3, 4, 2, 3}), Composition({2, 1, 2, 1}));
    const Tableau start =
        make({4, 3, 4, 2, 3}, {2, 1, 2, 1}, {{2, 6}, {1, 8}, {5, 10}, {3}, {4, 7, 9}});
    const GeneratorWord up{{2, 1, 4, 3, 6, 5, 4, 3, 7, 6, 5, 4, 8, 7, 9}};
    r = apply_word(DescentKind::RowStrict, up, start);
    REQUIRE(r.tag == HeckeTag::Swapped);
    CHECK(*r.tableau == srow(shape2));
}

TEST_CASE("straighten_from_bottom reproduces the reference chain") {
    const Tableau target =
        make({4, 3, 4, 2, 3}, {2, 1, 2}, {{2, 7}, {1, 9}, {6, 11}, {3, 4}, {5, 8, 10}});
    const GeneratorWord expected{{2, 1, 4, 3, 2, 7, 6, 5, 4, 3, 9, 8, 7, 6, 5, 4,
                                  6, 5, 7, 6, 10, 9, 8, 7, 10, 9}};
    CHECK(straighten_from_bottom(target) == expected);
    CHECK(straighten_from_bottom(s0(target.shape())).indices.empty());
}

TEST_CASE("straighten_to_top reproduces the reference chain") {
    const Tableau start =
        make({4, 3, 4, 2, 3}, {2, 1, 2, 1}, {{2, 6}, {1, 8}, {5, 10}, {3}, {4, 7, 9}});
    const GeneratorWord expected{{2, 1, 4, 3, 6, 5, 4, 3, 7, 6, 5, 4, 8, 7, 9}};
    CHECK(straighten_to_top(start) == expected);
    CHECK(straighten_to_top(srow(start.shape())).indices.empty());
}

TEST_CASE("straightening words replay exhaustively") {
    SUBCASE("named shapes") {
        for (const SkewShape& shape :
             {SkewShape(Composition({4, 2, 4}), Composition({2, 1, 2})),
              SkewShape(Composition({2, 3, 2}), Composition({1, 2, 1}))}) {
            const Tableau bottom = s0(shape);
            for (const Tableau& t : generate_sit(shape)) {
                HeckeResult down = apply_word(DescentKind::RowStrict,
                                              straighten_from_bottom(t), bottom);
                REQUIRE(down.tag != HeckeTag::Zero);
                CHECK(*down.tableau == t);
                HeckeResult up = apply_word(DescentKind::RowStrict, straighten_to_top(t), t);
                REQUIRE(up.tag != HeckeTag::Zero);
                CHECK(*up.tableau == srow(shape));
            }
        }
    }
    SUBCASE("all shapes to n = 6") {
        for (const SkewShape& shape : all_skew_shapes(6)) {
            const Tableau bottom = s0(shape), top = srow(shape);
            for (const Tableau& t : generate_sit(shape)) {
                const GeneratorWord down = straighten_from_bottom(t);
                CHECK(down.indices.empty() == (t == bottom));
                HeckeResult r = apply_word(DescentKind::RowStrict, down, bottom);
                REQUIRE(r.tag != HeckeTag::Zero);
                CHECK(*r.tableau == t);
                const GeneratorWord up = straighten_to_top(t);
                CHECK(up.indices.empty() == (t == top));
                r = apply_word(DescentKind::RowStrict, up, t);
                REQUIRE(r.tag != HeckeTag::Zero);
                CHECK(*r.tableau == top);
            }
        }
    }
}

TEST_CASE("0-Hecke relations") {
    CHECK(check_relations(DescentKind::RowStrict, SkewShape(Composition({3, 1, 2}))));
    for (DescentKind kind : kAllDescentKinds)
        CHECK(check_relations(kind, SkewShape(Composition({4, 2, 4}), Composition({2, 1, 2}))));
    // No generators: vacuously true.
    CHECK(check_relations(DescentKind::RowStrict, SkewShape(Composition({1}))));
    CHECK(check_relations(DescentKind::AStar, SkewShape(Composition({2, 1}), Composition({2}))));
}

TEST_CASE("consecutive generator runs act as a cycle up to 6 cells") {
    for (const SkewShape& shape : all_skew_shapes(6)) {
        if (shape.cell_count() > 6) continue;
        const int n = shape.cell_count();
        for (const Tableau& start : generate_sit(shape))
            for (int b = 1; b <= n - 1; ++b) {
                Tableau cur = start;
                for (int a = b; a <= n - 1; ++a) {
                    const HeckeResult r = apply(DescentKind::RowStrict, a, cur);
                    if (r.tag != HeckeTag::Swapped) break;
                    cur = *r.tableau;
                    // Entries b..a+1 of `start` should now read a+1, b, b+1, ..., a.
                    Tableau expected = start;
                    for (int v = b; v <= a + 1; ++v) {
                        const Cell c = start.cell_of(v);
                        const int replacement = v == b ? a + 1 : v - 1;
                        auto rows = expected.rows();
                        rows[c.row - 1][c.col - start.shape().row_start(c.row)] = replacement;
                        expected = Tableau(start.shape(), std::move(rows));
                    }
                    CHECK(cur == expected);
                }
            }
    }
}

TEST_CASE("pointwise idempotency up to n = 5") {
    for (const SkewShape& shape : all_skew_shapes(5))
        for (const Tableau& t : generate_sit(shape))
            for (DescentKind kind : kAllDescentKinds)
                for (int i = 1; i <= t.size() - 1; ++i) {
                    const HeckeResult once = apply(kind, i, t);
                    if (once.tag == HeckeTag::Zero) continue;
                    const HeckeResult twice = apply(kind, i, *once.tableau);
                    CHECK(twice.tag != HeckeTag::Zero);
                    CHECK(*twice.tableau == *once.tableau);
                }
}
