#pragma once

// Merge structure of the odd chains of N, 2N+1 and 4N+3.
//
// With n_i, m_i, l_i the odd chains of N, 2N+1, 4N+3 and r the first index
// where n_r -> n_{r+1} divides by 2^k with k > 1:
//   m_i = 2 n_i + 1            (i <= r)
//   m_{r+1} = 2^k n_{r+1} + 1
//   l_i = 2 m_i + 1            (i <= r + 1)
//   l_{r+2} = 2^j m_{r+2} + 1  (j = valuation of m_{r+1} -> m_{r+2}, expected > 1)
// and then k == 2 merges m into n after r+1, while k > 2 gives
// l_{r+2} = 4 m_{r+2} + 1 and merges l into m after r+2.

#include "collatz/core_sequences.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace collatz {

enum class MergeKind { MergesMwithN, MergesLwithM };

inline const char* to_string(MergeKind k) {
    return k == MergeKind::MergesMwithN ? "merges_m_with_n" : "merges_l_with_m";
}

struct MergeCheck {
    std::string relation;
    bool passed;
    std::string detail;
};

struct MergeReport {
    OddNatural n;
    std::size_t r = 0;
    std::size_t k = 0;
    std::size_t j = 0;
    std::vector<OddNatural> n_chain;
    std::vector<OddNatural> m_chain;
    std::vector<OddNatural> l_chain;
    MergeKind merge_kind = MergeKind::MergesMwithN;
    std::vector<MergeCheck> checks;

    bool passed() const {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
};

struct MergeOptions {
    std::optional<std::size_t> max_steps;  // defaults to tail_length(N) + 4
    std::size_t window = 8;                // post-merge terms compared
};

namespace detail {

/// `count` odd terms of the chain of `start`, continuing through 1 -> 1 so
/// that index-aligned relations stay meaningful after a chain hits 1.
inline std::pair<std::vector<OddNatural>, std::vector<std::size_t>> odd_prefix(const OddNatural& start,
                                                                                std::size_t count) {
    std::vector<OddNatural> terms{start};
    std::vector<std::size_t> vals;
    terms.reserve(count);
    while (terms.size() < count) {
        auto step = next_odd(terms.back());
        vals.push_back(step.valuation);
        terms.push_back(std::move(step.value));
    }
    return {std::move(terms), std::move(vals)};
}

}  // namespace detail

inline MergeReport analyze_merge(const OddNatural& n, const MergeOptions& options = {}) {
    const std::size_t tail = tail_length(n);
    const std::size_t max_steps = options.max_steps.value_or(tail + 4);

    std::size_t r = 0;
    std::size_t k = 0;
    {
        OddNatural current = n;
        bool found = false;
        for (std::size_t step = 0; step < max_steps; ++step) {
            auto next = next_odd(current);
            if (next.valuation > 1) {
                r = step;
                k = next.valuation;
                found = true;
                break;
            }
            current = std::move(next.value);
        }
        if (!found) {
            throw step_limit_exceeded("analyze_merge: no step with valuation > 1 within " +
                                      std::to_string(max_steps) + " steps of " + n.str());
        }
    }

    const std::size_t len = r + 3 + options.window;
    const OddNatural m0(2 * n.value() + 1);
    const OddNatural l0(4 * n.value() + 3);
    auto [n_chain, n_vals] = detail::odd_prefix(n, len);
    auto [m_chain, m_vals] = detail::odd_prefix(m0, len);
    auto [l_chain, l_vals] = detail::odd_prefix(l0, len);

    MergeReport rep{n, r, k, m_vals[r + 1], {}, {}, {}, k == 2 ? MergeKind::MergesMwithN : MergeKind::MergesLwithM,
                    {}};
    const std::size_t j = rep.j;

    auto check = [&](std::string relation, bool ok, std::string detail = {}) {
        rep.checks.push_back({std::move(relation), ok, std::move(detail)});
    };
    auto first_mismatch = [](auto&& pred, std::size_t from, std::size_t to) -> std::optional<std::size_t> {
        for (std::size_t i = from; i <= to; ++i) {
            if (!pred(i)) return i;
        }
        return std::nullopt;
    };
    auto at_index = [](std::optional<std::size_t> bad) {
        return bad ? "first mismatch at i = " + std::to_string(*bad) : std::string{};
    };

    auto bad = first_mismatch([&](std::size_t i) { return m_chain[i].value() == 2 * n_chain[i].value() + 1; }, 0, r);
    check("m_i = 2n_i + 1 for i <= r", !bad, at_index(bad));

    check("m_{r+1} = 2^k n_{r+1} + 1", m_chain[r + 1].value() == pow2(k) * n_chain[r + 1].value() + 1);

    bad = first_mismatch([&](std::size_t i) { return l_chain[i].value() == 2 * m_chain[i].value() + 1; }, 0, r + 1);
    check("l_i = 2m_i + 1 for i <= r+1", !bad, at_index(bad));

    check("j > 1", j > 1, "j = " + std::to_string(j));
    check("l_{r+2} = 2^j m_{r+2} + 1", l_chain[r + 2].value() == pow2(j) * m_chain[r + 2].value() + 1);

    if (k == 2) {
        bad = first_mismatch([&](std::size_t i) { return m_chain[i] == n_chain[i]; }, r + 2, r + 1 + options.window);
        check("m_i = n_i for i > r+1", !bad, at_index(bad));
    } else {
        check("l_{r+2} = 4m_{r+2} + 1", l_chain[r + 2].value() == 4 * m_chain[r + 2].value() + 1);
        bad = first_mismatch([&](std::size_t i) { return l_chain[i] == m_chain[i]; }, r + 3, r + 2 + options.window);
        check("l_i = m_i for i > r+2", !bad, at_index(bad));
    }

    check("r = tail_length(N)", r == tail,
          "r = " + std::to_string(r) + ", tail length = " + std::to_string(tail));

    rep.n_chain = std::move(n_chain);
    rep.m_chain = std::move(m_chain);
    rep.l_chain = std::move(l_chain);
    return rep;
}

}  // namespace collatz
