#pragma once

// Diagonal array of odd chains seeded by u_0 = 4n + 1 (n != 1 mod 3):
//
//   u_i     = 2 u_{i-1} + 1
//   v_{0,j} = u_j
//   v_{k,k} = 3 v_{k-1,k-1} + 2
//   v_{i,j} = 2 v_{i,j-1} + 1          (j > i)
//
// Column j >= 1 lists the first odd terms of the trajectory of u_j, each
// step above the diagonal being a single halving.

#include "collatz/check_report.hpp"
#include "collatz/core_sequences.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace collatz {

namespace network_part {
inline constexpr int residues_mod3 = 1;
inline constexpr int residues_mod4 = 2;
inline constexpr int columns_are_odd_chains = 3;
inline constexpr int diagonal_recurrence = 4;
inline constexpr int column_increasing = 5;
inline constexpr int diagonal_descent = 6;
}  // namespace network_part

inline const char* network_part_name(int part) {
    switch (part) {
        case network_part::residues_mod3: return "residues_mod3";
        case network_part::residues_mod4: return "residues_mod4";
        case network_part::columns_are_odd_chains: return "columns_are_odd_chains";
        case network_part::diagonal_recurrence: return "diagonal_recurrence";
        case network_part::column_increasing: return "column_increasing";
        case network_part::diagonal_descent: return "diagonal_descent";
        default: return "unknown";
    }
}

/// Row 0 holds u_0..u_C; row i >= 1 holds v_{i,i}..v_{i,C}.
/// Cells below the diagonal do not exist.
class NetworkArray {
public:
    NetworkArray(Natural seed, std::size_t rows, std::size_t cols)
        : seed_(std::move(seed)), rows_(rows), cols_(cols), cells_(rows + 1) {
        cells_[0].resize(cols + 1);
        for (std::size_t i = 1; i <= rows; ++i) cells_[i].resize(cols + 1 - i);
    }

    const Natural& seed() const noexcept { return seed_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    static bool defined(std::size_t i, std::size_t j) noexcept { return i == 0 || j >= i; }
    bool in_range(std::size_t i, std::size_t j) const noexcept { return i <= rows_ && j <= cols_ && defined(i, j); }

    const Natural& at(std::size_t i, std::size_t j) const { return cells_.at(i).at(offset(i, j)); }
    Natural& at(std::size_t i, std::size_t j) { return cells_.at(i).at(offset(i, j)); }

    const std::vector<Natural>& u() const noexcept { return cells_[0]; }

    /// Deepest row present in column j.
    std::size_t column_depth(std::size_t j) const noexcept { return std::min(j, rows_); }

private:
    std::size_t offset(std::size_t i, std::size_t j) const {
        if (!defined(i, j)) {
            throw std::out_of_range("network cell (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") lies below the diagonal");
        }
        return i == 0 ? j : j - i;
    }

    Natural seed_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::vector<Natural>> cells_;
};

inline NetworkArray build_network(const Natural& seed, std::size_t rows, std::size_t cols) {
    if (seed.sign() < 0) throw domain_error("build_network: seed must be a natural number");
    if (residue(seed, 3) == 1) {
        throw domain_error("build_network: seed " + seed.str() + " is congruent to 1 mod 3");
    }
    if (rows > cols) throw domain_error("build_network: rows must not exceed cols");

    NetworkArray arr(seed, rows, cols);
    arr.at(0, 0) = 4 * seed + 1;
    for (std::size_t j = 1; j <= cols; ++j) arr.at(0, j) = 2 * arr.at(0, j - 1) + 1;
    for (std::size_t i = 1; i <= rows; ++i) {
        arr.at(i, i) = 3 * arr.at(i - 1, i - 1) + 2;
        for (std::size_t j = i + 1; j <= cols; ++j) arr.at(i, j) = 2 * arr.at(i, j - 1) + 1;
    }
    return arr;
}

/// z_k = 2^{k+1} - 1, extended with z_{-1} = 0.
inline Natural all_ones(long k) {
    return k < 0 ? Natural(0) : pow2(static_cast<std::size_t>(k) + 1) - 1;
}

inline ArrayReport verify_network(const NetworkArray& arr) {
    namespace part = network_part;
    ArrayReport rep;
    const std::size_t rows = arr.rows();
    const std::size_t cols = arr.cols();
    auto fail = [&](int p, std::size_t i, std::size_t j, std::string detail) {
        rep.failures.push_back({p, i, j, std::move(detail)});
    };
    auto cell = [](std::size_t i, std::size_t j) {
        return "v(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };

    for (std::size_t i = 0; i <= rows; ++i) {
        for (std::size_t j = (i == 0 ? 0 : i); j <= cols; ++j) {
            const Natural& v = arr.at(i, j);
            ++rep.cells_checked;
            if (!is_odd(v)) fail(part::residues_mod3, i, j, cell(i, j) + " is even");

            const unsigned m3 = residue(v, 3);
            if (i == 0 && m3 == 2) fail(part::residues_mod3, i, j, "u_j = 2 mod 3");
            if (i > 0 && j > 0 && m3 != 2) fail(part::residues_mod3, i, j, cell(i, j) + " != 2 mod 3");

            const unsigned m4 = residue(v, 4);
            if (i == j && m4 != 1) fail(part::residues_mod4, i, j, "diagonal entry != 1 mod 4");
            if (i != j && m4 == 1) fail(part::residues_mod4, i, j, "off-diagonal entry = 1 mod 4");

            if (i > 0 && v != 3 * arr.at(i - 1, j - 1) + 2) {
                fail(part::diagonal_recurrence, i, j, cell(i, j) + " != 3 " + cell(i - 1, j - 1) + " + 2");
            }
        }
    }

    // Columns against direct iteration. The step out of v_{j,j} is not part of the claim.
    for (std::size_t j = 1; j <= cols; ++j) {
        const std::size_t depth = arr.column_depth(j);
        for (std::size_t i = 0; i < depth; ++i) {
            const Natural& v = arr.at(i, j);
            const Natural& below = arr.at(i + 1, j);
            if (!is_odd(v)) continue;  // already reported
            const auto step = next_odd(OddNatural(v));
            if (step.value.value() != below) {
                fail(part::columns_are_odd_chains, i + 1, j,
                     "next odd after " + cell(i, j) + " is " + step.value.str() + ", array has " + below.str());
            } else if (step.valuation != 1) {
                fail(part::columns_are_odd_chains, i + 1, j, "step valuation " + std::to_string(step.valuation));
            }
            if (!(v < below)) fail(part::column_increasing, i + 1, j, cell(i + 1, j) + " <= " + cell(i, j));
        }
        // Row form used in the column argument: v_{i,j} = 2^{j-i} v_{i,i} + z_{j-i-1}.
        for (std::size_t i = 1; i <= depth && i < j; ++i) {
            const std::size_t d = j - i;
            if (arr.at(i, j) != pow2(d) * arr.at(i, i) + all_ones(static_cast<long>(d) - 1)) {
                fail(part::columns_are_odd_chains, i, j, cell(i, j) + " != 2^(j-i) v(i,i) + z_(j-i-1)");
            }
        }
    }

    for (std::size_t i = 0; i <= rows; ++i) {
        const Natural& d = arr.at(i, i);
        if (d > 1 && is_odd(d) && !(next_odd(OddNatural(d)).value.value() < d)) {
            fail(part::diagonal_descent, i, i, "next odd after the diagonal entry is not smaller");
        }
    }

    rep.sort();
    return rep;
}

/// The algebraic step behind the column claim: (3 z_{m-1} + 1) / 2 = 2^m + z_{m-2}
/// for every offset m = j - i with 1 <= i < j <= cols.
inline ArrayReport verify_all_ones_identity(std::size_t cols) {
    ArrayReport rep;
    for (std::size_t j = 2; j <= cols; ++j) {
        for (std::size_t i = 1; i < j; ++i) {
            const long m = static_cast<long>(j - i);
            const Natural lhs_num = 3 * all_ones(m - 1) + 1;
            ++rep.cells_checked;
            if (is_odd(lhs_num) || lhs_num / 2 != pow2(static_cast<std::size_t>(m)) + all_ones(m - 2)) {
                rep.failures.push_back({network_part::columns_are_odd_chains, i, j, "all-ones identity fails"});
            }
        }
    }
    return rep;
}

}  // namespace collatz
