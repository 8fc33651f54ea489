#include "collatz/network_array.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"

#include <gtest/gtest.h>

namespace collatz {
namespace {

void expect_matches(const NetworkArray& arr, const std::vector<reference::Row>& table) {
    ASSERT_EQ(arr.rows() + 1, table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        const std::size_t first = i;
        ASSERT_EQ(first + table[i].size(), arr.cols() + 1) << "row " << i;
        for (std::size_t c = 0; c < table[i].size(); ++c) {
            EXPECT_EQ(arr.at(i, first + c), table[i][c]) << "(" << i << "," << first + c << ")";
        }
    }
}

TEST(Network, SeedZeroTable) {
    const auto arr = build_network(Natural(0), 7, 12);
    expect_matches(arr, reference::network_n0);
    EXPECT_EQ(arr.at(7, 7), 4373);
    EXPECT_EQ(arr.at(1, 2), 11);
    EXPECT_EQ(arr.at(2, 3), 35);
}

TEST(Network, SeedThreeTable) {
    const auto arr = build_network(Natural(3), 6, 11);
    expect_matches(arr, reference::network_n3);
    EXPECT_EQ(arr.at(6, 6), 10205);
}

TEST(Network, SeedTwoSmall) {
    const auto arr = build_network(Natural(2), 3, 5);
    const std::vector<std::uint64_t> u{9, 19, 39, 79, 159, 319};
    for (std::size_t j = 0; j < u.size(); ++j) EXPECT_EQ(arr.at(0, j), u[j]);
    EXPECT_EQ(arr.at(1, 1), 29);
}

TEST(Network, RejectsBadArguments) {
    EXPECT_THROW(build_network(Natural(1), 3, 5), domain_error);
    EXPECT_THROW(build_network(Natural(4), 3, 5), domain_error);
    EXPECT_THROW(build_network(Natural(0), 6, 5), domain_error);
    const auto arr = build_network(Natural(0), 3, 5);
    EXPECT_THROW(arr.at(2, 1), std::out_of_range);
}

TEST(Network, ReferenceArraysVerify) {
    const auto r0 = verify_network(build_network(Natural(0), 7, 12));
    EXPECT_TRUE(r0.passed()) << (r0.failures.empty() ? "" : r0.failures.front().detail);
    const auto r3 = verify_network(build_network(Natural(3), 6, 11));
    EXPECT_TRUE(r3.passed()) << (r3.failures.empty() ? "" : r3.failures.front().detail);
}

TEST(Network, CorruptionIsCaught) {
    auto arr = build_network(Natural(0), 7, 12);
    arr.at(1, 2) += 2;
    const auto rep = verify_network(arr);
    EXPECT_FALSE(rep.passed());
    EXPECT_TRUE(rep.has_failure(network_part::columns_are_odd_chains, 1, 2));
    EXPECT_TRUE(rep.has_failure(network_part::diagonal_recurrence, 1, 2));
    // Deterministic (part, i, j) ordering.
    for (std::size_t k = 1; k < rep.failures.size(); ++k) {
        const auto& a = rep.failures[k - 1];
        const auto& b = rep.failures[k];
        EXPECT_LE(std::tie(a.part, a.i, a.j), std::tie(b.part, b.i, b.j));
    }
}

TEST(Network, ColumnsAgreeWithLiteralIteration) {
    for (std::uint64_t n : {0u, 2u, 3u, 5u, 6u, 8u, 9u, 11u, 30u, 101u}) {
        const auto arr = build_network(Natural(n), 10, 12);
        for (std::size_t j = 1; j <= arr.cols(); ++j) {
            const std::size_t depth = arr.column_depth(j);
            const auto ref = oracle::odd_prefix(static_cast<std::uint64_t>(arr.at(0, j)), depth + 1);
            for (std::size_t i = 0; i <= depth; ++i) EXPECT_EQ(arr.at(i, j), ref[i]) << n << " (" << i << "," << j << ")";
        }
    }
}

TEST(Network, AllOnesIdentity) {
    const auto rep = verify_all_ones_identity(64);
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.cells_checked, 64u * 63u / 2u);
}

TEST(Network, DiagonalClosedForm) {
    // v_{k,k} + 1 = 3^k (u_0 + 1) follows from v_{k,k} = 3 v_{k-1,k-1} + 2.
    for (std::uint64_t n : {0u, 3u, 12u}) {
        const auto arr = build_network(Natural(n), 20, 20);
        for (std::size_t k = 0; k <= 20; ++k) {
            EXPECT_EQ(arr.at(k, k) + 1, pow3(k) * (arr.at(0, 0) + 1));
            EXPECT_EQ(residue(arr.at(k, k), 4), 1u);
        }
    }
}

TEST(Network, LargeSeedsVerify) {
    const Natural seed = pow2(100) * 3;  // 0 mod 3
    EXPECT_TRUE(verify_network(build_network(seed, 12, 12)).passed());
}

}  // namespace
}  // namespace collatz
