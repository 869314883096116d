#include "doctest.h"
#include "immaculate/tableau.hpp"
#include "immaculate/verify.hpp"
#include "oracles.hpp"

using namespace imm;

namespace {

Tableau make(std::vector<int> outer, std::vector<int> inner,
             std::vector<std::vector<int>> rows) {
    return Tableau(SkewShape(Composition(std::move(outer)), Composition(std::move(inner))),
                   std::move(rows));
}

long long multinomial_rows(const SkewShape& shape) {
    long long f = 1;
    for (int i = 2; i <= shape.cell_count(); ++i) f *= i;
    for (int r = 1; r <= shape.outer().length(); ++r) {
        long long g = 1;
        for (int i = 2; i <= shape.row_length(r); ++i) g *= i;
        f /= g;
    }
    return f;
}

}  // namespace

TEST_CASE("generate_sit on paper shapes") {
    const auto unique_sit = generate_sit(SkewShape(Composition({1, 2})));
    REQUIRE(unique_sit.size() == 1);
    CHECK(unique_sit.front() == make({1, 2}, {}, {{1}, {2, 3}}));

    CHECK(generate_sit(SkewShape(Composition({2, 3}), Composition({1, 2}))).size() == 2);
    CHECK(generate_sit(SkewShape(Composition({2, 3, 2}), Composition({1, 2, 1}))).size() == 6);
}

TEST_CASE("generate_sit equals the filter-all-permutations oracle up to n = 7") {
    for (const SkewShape& shape : all_skew_shapes(7)) {
        const auto fast = generate_sit(shape);
        const auto brute = oracle::brute_force_sit(shape);
        REQUIRE(fast.size() == brute.size());
        CHECK(fast == brute);
        for (const Tableau& t : fast) CHECK(is_sit(t));
    }
}

TEST_CASE("row-filling count when the lengths agree") {
    for (const SkewShape& shape : all_skew_shapes(7)) {
        if (shape.outer().length() != shape.inner().length()) continue;
        CHECK(static_cast<long long>(generate_sit(shape).size()) == multinomial_rows(shape));
    }
}

TEST_CASE("generate_set is the extended subset") {
    CHECK(generate_set(SkewShape(Composition({2, 3, 2}), Composition({1, 2, 1}))).size() == 3);
    const SkewShape flat(Composition({2, 3}), Composition({1, 2}));
    CHECK(generate_set(flat) == generate_sit(flat));
    for (const SkewShape& shape : all_skew_shapes(6)) {
        const auto sit = generate_sit(shape);
        for (const Tableau& t : generate_set(shape)) {
            CHECK(is_set(t));
            CHECK(std::find(sit.begin(), sit.end(), t) != sit.end());
        }
    }
}

TEST_CASE("generate_fillings basic families") {
    CHECK(generate_fillings(SkewShape(Composition({1, 2})),
                            {ColumnRule::FirstColStrict, RowRule::Weak}, 1)
              .empty());
    CHECK(generate_fillings(SkewShape(Composition({2})), {ColumnRule::FirstColStrict, RowRule::Strict}, 3)
              .size() == 3);
    CHECK(generate_fillings(SkewShape(Composition({2})), {ColumnRule::FirstColStrict, RowRule::Weak}, 2)
              .size() == 3);
    for (const Tableau& t :
         generate_fillings(SkewShape(Composition({2, 2}), Composition({1})),
                           {ColumnRule::AllColsStrict, RowRule::Weak}, 3))
        CHECK(satisfies(t, {ColumnRule::AllColsStrict, RowRule::Weak}));
    CHECK(generate_fillings(SkewShape(Composition({2})), {ColumnRule::FirstColWeak, RowRule::Weak}, 0)
              .empty());
    // The empty diagram has exactly the empty filling.
    CHECK(generate_fillings(SkewShape(Composition({2}), Composition({2})),
                            {ColumnRule::AllColsWeak, RowRule::Weak}, 0)
              .size() == 1);
}

TEST_CASE("descent sets") {
    const Tableau t = make({1, 2}, {}, {{1}, {2, 3}});
    CHECK(descent_set(t, DescentKind::DualImmaculate) == std::vector<int>{1});
    CHECK(descent_set(t, DescentKind::RowStrict) == std::vector<int>{2});

    for (const SkewShape& shape : all_skew_shapes(6))
        for (const Tableau& u : generate_sit(shape)) {
            const int n = u.size();
            for (auto [a, b] : {std::pair{DescentKind::DualImmaculate, DescentKind::RowStrict},
                                std::pair{DescentKind::AStar, DescentKind::ABarStar}}) {
                std::vector<int> both = descent_set(u, a);
                const auto other = descent_set(u, b);
                both.insert(both.end(), other.begin(), other.end());
                std::sort(both.begin(), both.end());
                std::vector<int> full;
                for (int i = 1; i <= n - 1; ++i) full.push_back(i);
                CHECK(both == full);
            }
        }
}

TEST_CASE("reading word and inversions") {
    CHECK(make({3}, {}, {{1, 2, 3}}).reading_word() == std::vector<int>{3, 2, 1});
    CHECK(srow(SkewShape(Composition({4, 2, 4}), Composition({2, 1, 2}))).reading_word() ==
          std::vector<int>{5, 4, 3, 2, 1});
    CHECK(inversions({5, 4, 2, 3, 1}) == 9);
    CHECK(inversions({1, 2, 3, 4}) == 0);
    CHECK(inversions({5, 4, 3, 2, 1}) == 10);
}

TEST_CASE("special tableaux reference values") {
    SUBCASE("straight shape, rows listed bottom to top") {
        const SkewShape shape(Composition({2, 1, 3}));
        CHECK(s0(shape) == make({2, 1, 3}, {}, {{1, 6}, {2}, {3, 4, 5}}));
        CHECK(srow(shape) == make({2, 1, 3}, {}, {{1, 2}, {3}, {4, 5, 6}}));
        CHECK(scol(shape) == make({2, 1, 3}, {}, {{1, 4}, {2}, {3, 5, 6}}));
    }
    SUBCASE("straight shape (3,1,2)") {
        const SkewShape shape(Composition({3, 1, 2}));
        CHECK(s0(shape) == make({3, 1, 2}, {}, {{1, 5, 6}, {2}, {3, 4}}));
        CHECK(srow(shape) == make({3, 1, 2}, {}, {{1, 2, 3}, {4}, {5, 6}}));
        CHECK(scol(shape) == make({3, 1, 2}, {}, {{1, 4, 6}, {2}, {3, 5}}));
    }
    SUBCASE("skew shape with surviving first column") {
        const SkewShape shape(Composition({2, 2, 3, 2, 4}), Composition({2, 1, 2}));
        CHECK(s0(shape) == make({2, 2, 3, 2, 4}, {2, 1, 2}, {{}, {8}, {7}, {1, 6}, {2, 3, 4, 5}}));
        CHECK(srow(shape) == make({2, 2, 3, 2, 4}, {2, 1, 2}, {{}, {1}, {2}, {3, 4}, {5, 6, 7, 8}}));
        CHECK(scol(shape) == make({2, 2, 3, 2, 4}, {2, 1, 2}, {{}, {3}, {6}, {1, 4}, {2, 5, 7, 8}}));
    }
    SUBCASE("skew shape with no surviving first column") {
        const SkewShape shape(Composition({5, 4, 6}), Composition({2, 1, 2}));
        CHECK(s0(shape) == make({5, 4, 6}, {2, 1, 2}, {{8, 9, 10}, {5, 6, 7}, {1, 2, 3, 4}}));
        CHECK(srow(shape) == make({5, 4, 6}, {2, 1, 2}, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9, 10}}));
        CHECK(scol(shape) == make({5, 4, 6}, {2, 1, 2}, {{2, 5, 8}, {1, 3, 6}, {4, 7, 9, 10}}));
    }
    for (const SkewShape& shape : all_skew_shapes(6)) {
        const auto sit = generate_sit(shape);
        for (const Tableau& t : {s0(shape), srow(shape), scol(shape)})
            CHECK(std::find(sit.begin(), sit.end(), t) != sit.end());
        CHECK(is_set(srow(shape)));
        if (shape.inner().empty()) CHECK(is_set(scol(shape)));
    }
}

TEST_CASE("phi embeds into the straight shape") {
    const Tableau t =
        make({2, 2, 3, 2, 4}, {2, 1, 2}, {{}, {4}, {1}, {2, 5}, {3, 6, 7, 8}});
    const Tableau expected =
        make({2, 2, 3, 2, 4}, {}, {{1, 2}, {3, 9}, {4, 5, 6}, {7, 10}, {8, 11, 12, 13}});
    CHECK(phi(t) == expected);

    SUBCASE("empty inner shape is the identity") {
        const Tableau u = make({3, 1, 2}, {}, {{1, 5, 6}, {2}, {3, 4}});
        CHECK(phi(u) == u);
    }
    SUBCASE("reading word of the embedded tableau") {
        const Tableau v =
            make({2, 2, 3, 2, 4}, {2, 1, 2}, {{}, {4}, {1}, {2, 6}, {3, 5, 7, 8}});
        CHECK(phi(v).reading_word() ==
              std::vector<int>{13, 12, 10, 8, 11, 7, 6, 5, 4, 9, 3, 2, 1});
    }
    SUBCASE("descent transport on (2,2)/(1)") {
        const SkewShape shape(Composition({2, 2}), Composition({1}));
        const int m = shape.inner().size();
        for (const Tableau& u : generate_sit(shape)) {
            const Tableau image = phi(u);
            for (DescentKind kind : kAllDescentKinds) {
                std::vector<int> shifted;
                for (int d : descent_set(u, kind)) shifted.push_back(d + m);
                std::vector<int> restricted;
                for (int d : descent_set(image, kind))
                    if (d > m && d < m + u.size()) restricted.push_back(d);
                CHECK(shifted == restricted);
            }
        }
    }
    SUBCASE("rejects invalid input") {
        const Tableau bad = make({2, 2}, {}, {{2, 3}, {1, 4}});
        CHECK_FALSE(is_sit(bad));
        CHECK_THROWS_AS(phi(bad), std::invalid_argument);
    }
}

TEST_CASE("inv_alpha_beta closed form") {
    CHECK(inv_alpha_beta(Composition({2, 2, 3, 2, 4}), Composition({2, 1, 2})) == 38);
    CHECK(inv_alpha_beta(Composition({3, 1, 2}), Composition()) == 0);
    CHECK_THROWS_AS(inv_alpha_beta(Composition({2}), Composition({3})), std::invalid_argument);
}

TEST_CASE("inv_alpha_beta counts mixed pairs, and the rank splits, up to n = 7") {
    for (const SkewShape& shape : all_skew_shapes(7)) {
        const int m = shape.inner().size();
        const long long expected = inv_alpha_beta(shape.outer(), shape.inner());
        const auto fillers = generate_sit(SkewShape(shape.inner()));
        for (const Tableau& t : generate_sit(shape))
            for (const Tableau& u : fillers) {
                const Tableau image = phi(t, u);
                const auto word = image.reading_word();
                long long mixed = 0;
                for (size_t p = 0; p < word.size(); ++p)
                    for (size_t q = p + 1; q < word.size(); ++q)
                        if (word[p] > m && word[q] <= m) ++mixed;
                CHECK(mixed == expected);
                CHECK(inversions(word) ==
                      inversions(t.reading_word()) + inversions(u.reading_word()) + expected);
            }
    }
}
