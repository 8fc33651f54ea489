#include "collatz/merge_analysis.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

namespace collatz {
namespace {

std::vector<std::uint64_t> words(const std::vector<OddNatural>& xs, std::size_t count) {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < count && i < xs.size(); ++i) out.push_back(static_cast<std::uint64_t>(xs[i].value()));
    return out;
}

TEST(Merge, SevenMergesMIntoN) {
    const auto rep = analyze_merge(OddNatural(7u));
    EXPECT_EQ(rep.r, 2u);
    EXPECT_EQ(rep.k, 2u);
    EXPECT_EQ(rep.merge_kind, MergeKind::MergesMwithN);
    EXPECT_EQ(words(rep.n_chain, 5), (std::vector<std::uint64_t>{7, 11, 17, 13, 5}));
    EXPECT_EQ(words(rep.m_chain, 5), (std::vector<std::uint64_t>{15, 23, 35, 53, 5}));
    // Oracle: literal iteration of 7, 15 and 31.
    EXPECT_EQ(words(rep.n_chain, 5), oracle::odd_prefix(7, 5));
    EXPECT_EQ(words(rep.m_chain, 5), oracle::odd_prefix(15, 5));
    EXPECT_EQ(words(rep.l_chain, 5), oracle::odd_prefix(31, 5));
    EXPECT_TRUE(rep.passed());
}

TEST(Merge, OneMergesAtIndexZero) {
    const auto rep = analyze_merge(OddNatural(1u));
    EXPECT_EQ(rep.r, 0u);
    EXPECT_EQ(rep.k, 2u);
    EXPECT_EQ(rep.m_chain[0], 3u);
    EXPECT_EQ(rep.m_chain[1], 5u);
    EXPECT_EQ(rep.m_chain[1].value(), pow2(rep.k) * rep.n_chain[1].value() + 1);
    EXPECT_TRUE(rep.passed());
}

TEST(Merge, MergeIndexIsTailLength) {
    const auto rep = analyze_merge(OddNatural(911u));
    EXPECT_EQ(rep.r, 3u);
    EXPECT_EQ(rep.r, tail_length(OddNatural(911u)));
    EXPECT_EQ(oracle::tail_length(911), 3u);
    EXPECT_TRUE(rep.passed());
}

TEST(Merge, KAboveTwoBranch) {
    // 3 -> 10 -> 5 divides by 2 once; 5 -> 16 divides by 16, so r = 1, k = 4.
    const auto rep = analyze_merge(OddNatural(3u));
    EXPECT_EQ(rep.r, 1u);
    EXPECT_EQ(rep.k, 4u);
    EXPECT_EQ(rep.merge_kind, MergeKind::MergesLwithM);
    EXPECT_TRUE(rep.passed());
}

TEST(Merge, StepLimitIsReported) {
    // 31 needs five steps to find a valuation above 1.
    EXPECT_THROW(analyze_merge(OddNatural(31u), MergeOptions{2, 8}), step_limit_exceeded);
}

TEST(Merge, AllRelationsHoldOnRange) {
    for (std::uint64_t n = 1; n < 4000; n += 2) {
        const auto rep = analyze_merge(OddNatural(n));
        for (const auto& c : rep.checks) ASSERT_TRUE(c.passed) << n << ": " << c.relation << " " << c.detail;
        ASSERT_GT(rep.j, 1u);
    }
}

TEST(Merge, WindowIsConfigurable) {
    const auto rep = analyze_merge(OddNatural(7u), MergeOptions{std::nullopt, 20});
    EXPECT_EQ(rep.n_chain.size(), rep.r + 3 + 20);
    EXPECT_TRUE(rep.passed());
}

}  // namespace
}  // namespace collatz
