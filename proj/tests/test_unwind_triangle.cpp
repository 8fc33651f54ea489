#include "collatz/unwind_triangle.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"

#include <gtest/gtest.h>

namespace collatz {
namespace {

TEST(Triangle, Reproduces2429) {
    const auto t = build_triangle(OddNatural(2429u));
    ASSERT_EQ(t.n(), 5u);
    for (std::size_t i = 0; i <= t.n(); ++i) {
        ASSERT_EQ(t.row(i).size(), reference::triangle_2429[i].size());
        for (std::size_t j = 0; j < t.row(i).size(); ++j) EXPECT_EQ(t.at(i, j), reference::triangle_2429[i][j]);
    }
    EXPECT_TRUE(verify_triangle(t).passed());
}

TEST(Triangle, SmallApexes) {
    const auto t5 = build_triangle(OddNatural(5u));
    ASSERT_EQ(t5.n(), 1u);
    EXPECT_EQ(t5.row(0), (std::vector<Natural>{5, 1}));
    EXPECT_EQ(t5.row(1), (std::vector<Natural>{3}));
    EXPECT_TRUE(verify_triangle(t5).passed());

    const auto t11 = build_triangle(OddNatural(11u));
    EXPECT_EQ(t11.row(0), (std::vector<Natural>{11, 3}));
    EXPECT_EQ(t11.row(1), (std::vector<Natural>{7}));
    EXPECT_TRUE(verify_triangle(t11).passed());

    EXPECT_THROW(build_triangle(OddNatural(7u)), domain_error);
    EXPECT_THROW(build_triangle(OddNatural(9u)), domain_error);
}

TEST(Triangle, PerturbedEntryIsLocated) {
    auto t = build_triangle(OddNatural(2429u));
    t.at(1, 1) += 2;
    const auto rep = verify_triangle(t);
    EXPECT_FALSE(rep.passed());
    EXPECT_TRUE(rep.has_failure(triangle_part::reverse_columns, 1, 1));
    EXPECT_TRUE(rep.has_failure(triangle_part::relations, 1, 1));
    EXPECT_TRUE(rep.has_failure(triangle_part::reverse_columns, 2, 1));
}

TEST(Triangle, ColumnsAreReverseChains) {
    const auto t = build_triangle(OddNatural(2429u));
    for (std::size_t j = 0; j <= t.n(); ++j) {
        const auto ref = reverse_odd_chain(OddNatural(t.at(0, j)), t.n() - j);
        for (std::size_t i = 0; i + j <= t.n(); ++i) EXPECT_EQ(t.at(i, j), ref.terms[i].value());
    }
}

TEST(Descent, Annotates2429) {
    const auto d = annotate_descent(OddNatural(2429u), 100);
    ASSERT_EQ(d.lines.size(), reference::descent_2429.size());
    EXPECT_EQ(d.termination, ReverseTermination::ReachedMultipleOf3);
    for (std::size_t k = 0; k < d.lines.size(); ++k) EXPECT_EQ(d.lines[k].value, reference::descent_2429[k]);

    struct Expect {
        std::size_t k;
        std::optional<std::array<std::uint64_t, 3>> three_two;  // a, b, x
        std::optional<std::array<std::uint64_t, 3>> four;       // i, c, B
    };
    const std::vector<Expect> expected{
        {0, {{5, 0, 10}}, std::nullopt},   {1, {{4, 1, 10}}, std::nullopt},  {2, {{3, 2, 10}}, std::nullopt},
        {3, {{2, 3, 10}}, std::nullopt},   {4, {{1, 4, 10}}, std::nullopt},  {5, {{0, 5, 10}}, {{0, 1, 106}}},
        {6, {{1, 0, 142}}, {{1, 0, 106}}}, {7, {{0, 1, 142}}, {{0, 1, 94}}}, {8, {{3, 0, 14}}, {{1, 0, 94}}},
        {9, {{2, 1, 14}}, std::nullopt},   {10, {{1, 2, 14}}, std::nullopt}, {11, {{0, 3, 14}}, std::nullopt},
    };
    for (const auto& e : expected) {
        const auto& line = d.lines[e.k];
        ASSERT_EQ(line.three_two.has_value(), e.three_two.has_value()) << e.k;
        ASSERT_EQ(line.four.has_value(), e.four.has_value()) << e.k;
        if (e.three_two) {
            EXPECT_EQ(line.three_two->a, (*e.three_two)[0]) << e.k;
            EXPECT_EQ(line.three_two->b, (*e.three_two)[1]) << e.k;
            EXPECT_EQ(line.three_two->x, (*e.three_two)[2]) << e.k;
        }
        if (e.four) {
            EXPECT_EQ(line.four->i, (*e.four)[0]) << e.k;
            EXPECT_EQ(line.four->c, (*e.four)[1]) << e.k;
            EXPECT_EQ(line.four->b, (*e.four)[2]) << e.k;
        }
    }
}

TEST(Descent, CorrectedLines) {
    // 283 = 2 * 142 - 1 and 377 = 3^3 * 14 - 1 = (4 * 283 - 1) / 3.
    EXPECT_EQ(2 * 142 - 1, 283);
    EXPECT_EQ(27 * 14 - 1, 377);
    EXPECT_EQ((4 * 283 - 1) / 3, 377);
    EXPECT_NE(4 * 142 - 1, 283);
    EXPECT_NE(4 * 94 - 1, 377);
}

TEST(Descent, SmallAndOneModThreeStarts) {
    const auto d5 = annotate_descent(OddNatural(5u), 10);
    ASSERT_EQ(d5.lines.size(), 2u);
    EXPECT_EQ(d5.lines[0].three_two->reconstruct(), 5);
    EXPECT_EQ(d5.lines[0].three_two->x, 2);
    EXPECT_EQ(d5.lines[1].value, 3u);
    EXPECT_EQ(d5.lines[1].three_two->b, 1u);
    EXPECT_EQ(d5.lines[1].three_two->x, 2);

    const auto d91 = annotate_descent(OddNatural(91u), 100);
    EXPECT_EQ(d91.lines.size(), 9u);
    EXPECT_EQ(d91.lines[0].four->c, 2u);
    EXPECT_EQ(d91.lines[0].four->b, 10);
    EXPECT_EQ(d91.lines[1].four->i, 1u);
    EXPECT_EQ(d91.lines[2].four->i, 2u);
    EXPECT_EQ(d91.lines[2].three_two->a, 4u);

    EXPECT_THROW(annotate_descent(OddNatural(27u), 10), domain_error);
}

// --- properties -----------------------------------------------------------

TEST(TriangleProperties, VerifiesOnRange) {
    for (std::uint64_t a = 5; a < 20'000; a += 6) {
        const auto t = build_triangle(OddNatural(a));
        ASSERT_TRUE(verify_triangle(t).passed()) << a;
        // Left column values decrease while the chain stays 2 mod 3.
        for (std::size_t i = 1; i <= t.n(); ++i) ASSERT_LT(t.at(i, 0), t.at(i - 1, 0)) << a;
    }
}

TEST(TriangleProperties, LeftColumnMatchesDescent) {
    oracle::OddGen gen(5, 1ULL << 36);
    for (int n = 0; n < 500; ++n) {
        std::uint64_t a = gen();
        if (a % 3 != 2) continue;
        const auto t = build_triangle(OddNatural(a));
        const auto d = annotate_descent(OddNatural(a), t.n() + 10);
        ASSERT_GT(d.lines.size(), t.n());
        for (std::size_t i = 0; i <= t.n(); ++i) {
            EXPECT_EQ(d.lines[i].value.value(), t.at(i, 0));
            ASSERT_TRUE(d.lines[i].three_two.has_value());
            EXPECT_EQ(d.lines[i].three_two->b, i);
            EXPECT_EQ(d.lines[i].three_two->a, t.n() - i);
        }
    }
}

TEST(TriangleProperties, EveryAnnotationReconstructs) {
    for (std::uint64_t a = 1; a < 30'000; a += 2) {
        if (a % 3 == 0) continue;
        const auto d = annotate_descent(OddNatural(a), 500);
        for (const auto& line : d.lines) {
            if (line.three_two) {
                ASSERT_EQ(line.three_two->reconstruct(), line.value.value());
            }
            if (line.four) {
                ASSERT_EQ(line.four->reconstruct(), line.value.value());
            }
            ASSERT_TRUE(line.three_two || line.four || line.value == 1u) << a << " line " << line.index;
        }
    }
}

}  // namespace
}  // namespace collatz
