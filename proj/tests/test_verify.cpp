#include "doctest.h"
#include "immaculate/verify.hpp"

using namespace imm;

namespace {

Tableau make(std::vector<int> outer, std::vector<int> inner,
             std::vector<std::vector<int>> rows) {
    return Tableau(SkewShape(Composition(std::move(outer)), Composition(std::move(inner))),
                   std::move(rows));
}

Int char_dimension(const QSymF& f) {
    Int total = 0;
    for (const auto& [comp, c] : f.coeffs()) total += c;
    return total;
}

}  // namespace

TEST_CASE("split at a threshold") {
    const Tableau big =
        make({2, 2, 3, 2, 4}, {}, {{1, 2}, {3, 9}, {4, 5, 6}, {7, 10}, {8, 11, 12, 13}});
    auto sp = split(big, 5);
    REQUIRE(sp.has_value());
    CHECK(sp->low == srow(SkewShape(Composition({2, 1, 2}))));
    CHECK(sp->high ==
          make({2, 2, 3, 2, 4}, {2, 1, 2}, {{}, {4}, {1}, {2, 5}, {3, 6, 7, 8}}));

    SUBCASE("degenerate thresholds") {
        const Tableau t = make({3, 1, 2}, {}, {{1, 5, 6}, {2}, {3, 4}});
        auto zero = split(t, 0);
        REQUIRE(zero.has_value());
        CHECK(zero->low.size() == 0);
        CHECK(zero->high == t);
        auto full = split(t, 6);
        REQUIRE(full.has_value());
        CHECK(full->low == t);
        CHECK(full->high.size() == 0);
    }
    SUBCASE("non-immaculate standard tableaux can fail to split") {
        const Tableau bad = make({2, 2}, {}, {{2, 3}, {1, 4}});
        CHECK_FALSE(split(bad, 1).has_value());
    }
}

TEST_CASE("split premise and round trip up to n = 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Composition& alpha : compositions_of(n))
            for (const Tableau& t : generate_sit(SkewShape(alpha)))
                for (int m = 0; m <= n; ++m) {
                    auto sp = split(t, m);
                    REQUIRE(sp.has_value());
                    CHECK(is_sit(sp->low));
                    CHECK(is_sit(sp->high));
                    CHECK(contains(sp->low.shape().outer(), alpha));
                    CHECK(phi(sp->high, sp->low) == t);
                }
}

TEST_CASE("branching over standard immaculate tableaux") {
    SUBCASE("alpha = (2,2), m = 2") {
        const BranchReport r = branching_check(Composition({2, 2}), 2, DescentKind::RowStrict);
        CHECK(r.ok());
        REQUIRE(r.block_sizes.size() == 2);
        CHECK(r.block_sizes.at(Composition({2})) == 1);
        CHECK(r.block_sizes.at(Composition({1, 1})) == 2);
    }
    SUBCASE("alpha = (3,1,2), every kind at m = 1 and m = n") {
        for (DescentKind kind : kAllDescentKinds) {
            CHECK(branching_check(Composition({3, 1, 2}), 1, kind).ok());
            CHECK(branching_check(Composition({3, 1, 2}), 6, kind).ok());
        }
    }
    SUBCASE("exhaustive up to n = 5") {
        for (int n = 1; n <= 5; ++n)
            for (const Composition& alpha : compositions_of(n))
                for (int m = 1; m <= n; ++m)
                    for (DescentKind kind : kAllDescentKinds)
                        CHECK(branching_check(alpha, m, kind).ok());
    }
}

TEST_CASE("branching over extended tableaux") {
    SUBCASE("small cases") {
        CHECK(branching_check_set(Composition({2, 2}), 2, DescentKind::RowStrict).ok());
        for (int m = 1; m <= 3; ++m)
            for (DescentKind kind : kAllDescentKinds)
                CHECK(branching_check_set(Composition({2, 1}), m, kind).ok());
        CHECK(branching_check_set(Composition({3, 1}), 4, DescentKind::DualImmaculate).ok());
    }
    SUBCASE("blocks can be strictly smaller than the product sets") {
        const BranchReport r = branching_check_set(Composition({2, 3}), 3, DescentKind::RowStrict);
        CHECK(r.ok());
        REQUIRE(!r.flags.empty());
        CHECK(r.flags.front().find("(1,2)") != std::string::npos);
        CHECK(r.block_sizes.at(Composition({1, 2})) == 0);
        CHECK(r.block_sizes.at(Composition({2, 1})) == 2);
    }
    SUBCASE("exhaustive up to n = 5") {
        for (int n = 1; n <= 5; ++n)
            for (const Composition& alpha : compositions_of(n))
                for (int m = 1; m <= n; ++m)
                    for (DescentKind kind : kAllDescentKinds)
                        CHECK(branching_check_set(alpha, m, kind).ok());
    }
}

TEST_CASE("composition series") {
    SUBCASE("single generator shape") {
        const SeriesResult r =
            composition_series_check(SkewShape(Composition({1, 2})), DescentKind::RowStrict);
        CHECK(r.ok);
        QSymF expected(3);
        expected.add(Composition({2, 1}), 1);
        CHECK(r.characteristic == expected);
    }
    SUBCASE("figure shape") {
        const SkewShape shape(Composition({4, 2, 4}), Composition({2, 1, 2}));
        const SeriesResult r = composition_series_check(shape, DescentKind::RowStrict);
        CHECK(r.ok);
        CHECK(char_dimension(r.characteristic) == 30);
    }
    SUBCASE("single-tableau shape") {
        const SeriesResult r =
            composition_series_check(SkewShape(Composition({2, 3}), Composition({2, 2})),
                                     DescentKind::DualImmaculate);
        CHECK(r.ok);
        CHECK(r.characteristic.coeffs().size() == 1);
        CHECK(char_dimension(r.characteristic) == 1);
    }
    SUBCASE("exhaustive up to n = 5, all kinds") {
        for (const SkewShape& shape : all_skew_shapes(5))
            for (DescentKind kind : kAllDescentKinds) {
                const SeriesResult r = composition_series_check(shape, kind);
                CHECK(r.ok);
                CHECK(char_dimension(r.characteristic) ==
                      Int(generate_sit(shape).size()));
            }
    }
}

TEST_CASE("cyclicity") {
    for (const SkewShape& shape : all_skew_shapes(6))
        for (DescentKind kind : kAllDescentKinds) CHECK(cyclicity_check(shape, kind));
    CHECK(cyclicity_check(SkewShape(Composition({2, 3}), Composition({2, 2})),
                          DescentKind::AStar));
}

TEST_CASE("cyclicity via straightening witnesses at n = 7") {
    for (int n = 7; n <= 7; ++n)
        for (const Composition& alpha : compositions_of(n)) {
            const SkewShape shape(alpha);
            CHECK(cyclicity_check(shape, DescentKind::RowStrict));
            CHECK(cyclicity_check(shape, DescentKind::DualImmaculate));
        }
}

TEST_CASE("cyclicity on large reference shapes") {
    CHECK(cyclicity_check(SkewShape(Composition({4, 3, 4, 2, 3}), Composition({2, 1, 2})),
                          DescentKind::RowStrict));
    CHECK(cyclicity_check(SkewShape(Composition({4, 3, 4, 2, 3}), Composition({2, 1, 2, 1})),
                          DescentKind::DualImmaculate));
}

TEST_CASE("extended tableaux need not be cyclically generated") {
    CHECK_FALSE(set_cyclicity_check(SkewShape(Composition({2, 3, 2}), Composition({1, 2, 1}))));
    CHECK_FALSE(set_cyclicity_check(SkewShape(Composition({4, 2, 4}), Composition({2, 1, 2}))));
    CHECK(set_cyclicity_check(SkewShape(Composition({2, 3}), Composition({1, 2}))));
    CHECK(set_cyclicity_check(SkewShape(Composition({2, 2}))));
    // Straight shapes stay cyclic: the column superstandard tableau generates.
    for (int n = 1; n <= 5; ++n)
        for (const Composition& alpha : compositions_of(n))
            CHECK(set_cyclicity_check(SkewShape(alpha)));
}

TEST_CASE("closure of SET and its complement") {
    CHECK(closure_check(SkewShape(Composition({4, 2, 4}), Composition({2, 1, 2}))).all());
    CHECK(closure_check(SkewShape(Composition({2, 3, 2}), Composition({1, 2, 1}))).all());
    CHECK(closure_check(SkewShape(Composition({2, 3}), Composition({1, 2}))).all());
    for (const SkewShape& shape : all_skew_shapes(6)) CHECK(closure_check(shape).all());
}

TEST_CASE("enumeration formula") {
    SUBCASE("unique tableau of (1,2)") {
        const SitCountReport r = sit_count(SkewShape(Composition({1, 2})));
        CHECK(r.by_generation == 1);
        CHECK(r.formula_value == 1);
        CHECK(r.formula_agrees);
    }
    SUBCASE("rows fill independently") {
        const SitCountReport r =
            sit_count(SkewShape(Composition({2, 3, 2}), Composition({1, 2, 1})));
        CHECK(r.by_generation == 6);
        REQUIRE(r.multinomial_value.has_value());
        CHECK(*r.multinomial_value == 6);
        CHECK(r.formula_agrees);
    }
    SUBCASE("straight shape") {
        const SitCountReport r = sit_count(SkewShape(Composition({3, 1, 2})));
        CHECK(r.formula_agrees);
        CHECK(!r.notes.empty());
    }
    SUBCASE("exhaustive up to n = 6") {
        for (const SkewShape& shape : all_skew_shapes(6)) {
            const SitCountReport r = sit_count(shape);
            CHECK(r.formula_agrees);
            if (r.multinomial_value) CHECK(*r.multinomial_value == r.by_generation);
        }
    }
}
