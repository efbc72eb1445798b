#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "staircase/constructions.hpp"
#include "staircase/gamma.hpp"
#include "support.hpp"

using staircase::DivSet;
using staircase::GammaValue;
using staircase::Monomial;
using staircase::PairIndex;
using staircase::SquareTable;
using staircase::StaircaseIdeal;
using testsupport::random_staircase;

TEST_CASE("noncomparable is the nesting condition on V") {
    CHECK(staircase::noncomparable({1, 3}, {2, 2}));
    CHECK(staircase::noncomparable({2, 2}, {1, 3}));
    CHECK(staircase::noncomparable({2, 2}, {1, 5}));
    for (std::size_t i = 1; i <= 6; ++i)
        for (std::size_t j = i; j <= 6; ++j)
            CHECK_FALSE(staircase::noncomparable({1, 1}, {i, j}));
    CHECK_FALSE(staircase::noncomparable({1, 2}, {1, 2}));
    CHECK_FALSE(staircase::noncomparable({1, 2}, {2, 3}));
}

TEST_CASE("div_set collects every dividing pair") {
    auto rng = std::mt19937_64(0xd1f5e7u);
    for (std::size_t it = 0; it < 50; ++it) {
        const StaircaseIdeal ideal = random_staircase(rng, 7, 40);
        const DivSet ds = staircase::div_set(ideal, {1, 1});
        REQUIRE(ds.members.size() == 1);
        CHECK(ds.members[0] == PairIndex{1, 1});
    }

    const StaircaseIdeal square3({{2, 0}, {1, 1}, {0, 2}});
    const DivSet ds = staircase::div_set(square3, {1, 3});
    CHECK(ds.target == PairIndex{1, 3});
    CHECK(ds.members == std::vector<PairIndex>{{1, 3}, {2, 2}});

    const DivSet ds6 = staircase::div_set(staircase::tiny_square_ideal(6), {1, 3});
    CHECK(ds6.members == std::vector<PairIndex>{{1, 3}, {2, 2}});
}

TEST_CASE("div_set invariants: target is a member, others are noncomparable to it") {
    auto rng = std::mt19937_64(0xd1f5e8u);
    for (std::size_t it = 0; it < 200; ++it) {
        const StaircaseIdeal ideal = random_staircase(rng, 8, 60);
        for (const PairIndex& p : staircase::all_pairs(ideal.mu())) {
            const DivSet ds = staircase::div_set(ideal, p);
            CHECK(ds.target == p);
            CHECK(std::find(ds.members.begin(), ds.members.end(), p) != ds.members.end());
            for (const PairIndex& w : ds.members) {
                CHECK(staircase::divides(staircase::pair_product(ideal, w),
                                         staircase::pair_product(ideal, p)));
                if (!(w == p))
                    CHECK(staircase::noncomparable(w, p));
            }
            CHECK(std::is_sorted(ds.members.begin(), ds.members.end(),
                                 staircase::pair_lex_less));
        }
    }
}

TEST_CASE("gamma fixes the generators of the square") {
    auto rng = std::mt19937_64(0x9a33a1u);
    for (std::size_t it = 0; it < 100; ++it) {
        const StaircaseIdeal ideal = random_staircase(rng, 8, 50);
        const SquareTable table(ideal);
        const std::size_t m = ideal.mu();
        const GammaValue lo = table.gamma({1, 2 <= m ? 2 : 1});
        CHECK(lo.image == PairIndex{1, 2 <= m ? 2 : 1});
        const GammaValue hi = table.gamma({m, m});
        CHECK(hi.image == PairIndex{m, m});
    }
}

TEST_CASE("gamma on the m=10 construction maps (1,3) to (2,2)") {
    const StaircaseIdeal example = staircase::tiny_square_ideal(10);
    const GammaValue g = staircase::gamma_map(example, {1, 3});
    CHECK(g.source == PairIndex{1, 3});
    CHECK(g.image == PairIndex{2, 2});
    CHECK(g.image_monomial == Monomial{80, 20});
}

TEST_CASE("gamma picks the lexicographically least representative") {
    // In the m=10 construction u_1 u_10 = u_2 u_9, so the monomial (50,50)
    // is represented by both (1,10) and (2,9); the canonical pair is (1,10).
    const StaircaseIdeal example = staircase::tiny_square_ideal(10);
    const SquareTable table(example);
    const GammaValue a = table.gamma({1, 10});
    CHECK(a.image == PairIndex{1, 10});
    CHECK(a.image_monomial == Monomial{50, 50});
    const GammaValue b = table.gamma({2, 9});
    CHECK(b.image == PairIndex{1, 10});
    CHECK(b.image_monomial == Monomial{50, 50});
}

TEST_CASE("gamma value divides its source and is idempotent") {
    auto rng = std::mt19937_64(0x9a33a2u);
    for (std::size_t it = 0; it < 200; ++it) {
        const StaircaseIdeal ideal = random_staircase(rng, 8, 60);
        const SquareTable table(ideal);
        const auto& square_gens = table.square().gens();
        for (const PairIndex& p : staircase::all_pairs(ideal.mu())) {
            const GammaValue g = table.gamma(p);
            CHECK(g.source == p);
            CHECK(staircase::divides(g.image_monomial,
                                     staircase::pair_product(ideal, p)));
            CHECK(std::find(square_gens.begin(), square_gens.end(), g.image_monomial) !=
                  square_gens.end());
            const GammaValue gg = table.gamma(g.image);
            CHECK(gg.image == g.image);
            CHECK(gg.image_monomial == g.image_monomial);
        }
    }
}

TEST_CASE("gamma is onto the generators of the square") {
    auto rng = std::mt19937_64(0x9a33a3u);
    for (std::size_t it = 0; it < 100; ++it) {
        const StaircaseIdeal ideal = random_staircase(rng, 8, 60);
        const SquareTable table(ideal);
        std::vector<Monomial> images;
        for (const PairIndex& p : staircase::all_pairs(ideal.mu()))
            images.push_back(table.gamma(p).image_monomial);
        for (const Monomial& g : table.square().gens())
            CHECK(std::find(images.begin(), images.end(), g) != images.end());
    }
}

TEST_CASE("SquareTable::square is ideal_product(I, I)") {
    auto rng = std::mt19937_64(0x9a33a4u);
    for (std::size_t it = 0; it < 100; ++it) {
        const StaircaseIdeal ideal = random_staircase(rng, 8, 60);
        CHECK(SquareTable(ideal).square() == staircase::ideal_product(ideal, ideal));
    }
}

TEST_CASE("square_generator_pairs lists one canonical pair per square generator") {
    const StaircaseIdeal maximal({{1, 0}, {0, 1}});
    CHECK(staircase::square_generator_pairs(maximal) ==
          std::vector<PairIndex>{{1, 1}, {1, 2}, {2, 2}});

    const StaircaseIdeal example = staircase::tiny_square_ideal(10);
    CHECK(staircase::square_generator_pairs(example) ==
          std::vector<PairIndex>{{1, 1},
                                 {1, 2},
                                 {1, 9},
                                 {1, 10},
                                 {2, 2},
                                 {2, 10},
                                 {9, 9},
                                 {9, 10},
                                 {10, 10}});

    // All six products of (x^3, x^2 y, y^3) are distinct and minimal, so
    // every pair of V is canonical here.
    const StaircaseIdeal single({{3, 0}, {2, 1}, {0, 3}});
    CHECK(staircase::square_generator_pairs(single) ==
          std::vector<PairIndex>{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}});

    auto rng = std::mt19937_64(0x9a33a5u);
    for (std::size_t it = 0; it < 200; ++it) {
        const StaircaseIdeal ideal = random_staircase(rng, 8, 60);
        const auto pairs = staircase::square_generator_pairs(ideal);
        CHECK(pairs.size() ==
              staircase::mu(staircase::ideal_product(ideal, ideal)));
    }
}
