#pragma once

// Bulk property runner. A suite filters the integers in [lo, hi], checks each
// survivor, and reports failures with their witnesses in ascending order.
// Work is split into fixed chunks evaluated on a small thread pool and merged
// in chunk order, so the report does not depend on the thread count.

#include "collatz/backward_explorer.hpp"
#include "collatz/core_sequences.hpp"
#include "collatz/merge_analysis.hpp"
#include "collatz/network_array.hpp"
#include "collatz/reverse_collatz.hpp"
#include "collatz/unwind_triangle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace collatz {

enum class Suite {
    Tails,
    CorollaryNextOdd,
    JumpEquivalence,
    MergeTheorem,
    Network,
    ReverseAdjunction,
    ReverseMinimality,
    Lemma3n1,
    LemmaUnwind,
    Triangle,
    JumpCycle,
    BackwardRoundtrip,
};

struct SuiteInfo {
    Suite suite;
    std::string_view id;
    std::string_view filter;
};

inline constexpr std::array<SuiteInfo, 12> suite_table{{
    {Suite::Tails, "tails", "odd A, A = 3 mod 4"},
    {Suite::CorollaryNextOdd, "corollary_next_odd", "odd A, A = 3 mod 4"},
    {Suite::JumpEquivalence, "jump_equivalence", "odd A"},
    {Suite::MergeTheorem, "merge_theorem", "odd N"},
    {Suite::Network, "network", "seed n, n != 1 mod 3"},
    {Suite::ReverseAdjunction, "reverse_adjunction", "odd p, p != 0 mod 3"},
    {Suite::ReverseMinimality, "reverse_minimality", "odd p"},
    {Suite::Lemma3n1, "lemma_3n1", "odd A > 1, A = 1 mod 3"},
    {Suite::LemmaUnwind, "lemma_unwind", "odd A, A = 2 mod 3"},
    {Suite::Triangle, "triangle", "odd A, A = 2 mod 3"},
    {Suite::JumpCycle, "jump_cycle", "odd A, A = 0 mod 3"},
    {Suite::BackwardRoundtrip, "backward_roundtrip", "odd A"},
}};

inline const SuiteInfo& suite_info(Suite s) {
    for (const auto& info : suite_table) {
        if (info.suite == s) return info;
    }
    throw std::logic_error("unregistered suite");
}

inline Suite parse_suite(std::string_view id) {
    for (const auto& info : suite_table) {
        if (info.id == id) return info.suite;
    }
    throw domain_error("unknown suite '" + std::string(id) + "'");
}

struct SuiteOptions {
    std::size_t rows = 12;           // network
    std::size_t cols = 12;           // network
    std::size_t jump_heights = 4;    // jump_equivalence
    std::size_t cycle_periods = 3;   // jump_cycle
    std::size_t backward_depth = 10; // backward_roundtrip
    std::size_t odd_step_limit = default_odd_step_limit;
    std::size_t raw_step_limit = default_raw_step_limit;
    std::size_t oracle_sample = 1000;  // corollary_next_odd raw-iteration cross-check
    std::size_t threads = 0;           // 0 = hardware concurrency
    std::optional<std::chrono::milliseconds> time_budget;
};

struct Failure {
    Natural witness;
    std::string detail;
};

struct VerificationReport {
    std::string property_id;
    Natural lo;
    Natural hi;
    std::string filter;
    std::uint64_t checked = 0;
    std::vector<Failure> failures;
    std::map<std::string, std::uint64_t> tallies;
    std::chrono::nanoseconds elapsed{0};
    bool complete = true;

    bool passed() const noexcept { return complete && failures.empty(); }
};

namespace detail {

struct CaseResult {
    std::vector<std::string> failures;
    std::map<std::string, std::uint64_t> tallies;

    void fail(std::string detail) { failures.push_back(std::move(detail)); }
};

inline std::string first_violation(const CheckReport& rep) {
    if (rep.violations.empty()) return "failed";
    const auto& v = rep.violations.front();
    return v.check + " at " + std::to_string(v.index) + ": " + v.detail;
}

inline std::string first_failure(const ArrayReport& rep, const char* (*part_name)(int)) {
    const auto& f = rep.failures.front();
    return std::string(part_name(f.part)) + " at (" + std::to_string(f.i) + "," + std::to_string(f.j) + "): " + f.detail;
}

inline const char* triangle_part_name(int part) {
    switch (part) {
        case triangle_part::reverse_columns: return "reverse_columns";
        case triangle_part::relations: return "relations";
        case triangle_part::closed_forms: return "closed_forms";
        default: return "unknown";
    }
}

/// Odd predecessors of p below `bound` by exhaustive search, in machine words.
inline std::vector<std::uint64_t> brute_force_predecessors(std::uint64_t p, std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 1; q < bound; q += 2) {
        std::uint64_t x = 3 * q + 1;
        x >>= std::countr_zero(x);
        if (x == p) out.push_back(q);
    }
    return out;
}

inline bool filter(Suite s, const Natural& x) {
    switch (s) {
        case Suite::Tails:
        case Suite::CorollaryNextOdd: return residue(x, 4) == 3;
        case Suite::JumpEquivalence:
        case Suite::MergeTheorem:
        case Suite::ReverseMinimality:
        case Suite::BackwardRoundtrip: return is_odd(x);
        case Suite::Network: return residue(x, 3) != 1;
        case Suite::ReverseAdjunction: return is_odd(x) && residue(x, 3) != 0;
        case Suite::Lemma3n1: return is_odd(x) && x > 1 && residue(x, 3) == 1;
        case Suite::LemmaUnwind:
        case Suite::Triangle: return is_odd(x) && residue(x, 3) == 2;
        case Suite::JumpCycle: return is_odd(x) && residue(x, 3) == 0;
    }
    return false;
}

inline void check_one(Suite s, const Natural& x, const SuiteOptions& opt, CaseResult& out) {
    switch (s) {
        case Suite::Tails: {
            const auto d = verify_tail_descent(OddNatural(x));
            if (!d.report.passed()) out.fail(first_violation(d.report));
            break;
        }
        case Suite::CorollaryNextOdd: {
            const auto k = next_odd(OddNatural(x)).valuation;
            if (k != 1) out.fail("valuation " + std::to_string(k));
            break;
        }
        case Suite::JumpEquivalence: {
            const OddNatural a(x);
            for (std::size_t h = 1; h <= opt.jump_heights; ++h) {
                if (!equivalent(a, jump_value(a, h))) out.fail("not equivalent to its jump of height " + std::to_string(h));
            }
            break;
        }
        case Suite::MergeTheorem: {
            try {
                const auto rep = analyze_merge(OddNatural(x));
                for (const auto& c : rep.checks) {
                    if (!c.passed) out.fail(c.relation + (c.detail.empty() ? "" : " (" + c.detail + ")"));
                }
                ++out.tallies[rep.k == 2 ? "k_equals_2" : "k_above_2"];
            } catch (const step_limit_exceeded& e) {
                out.fail(e.what());
            }
            break;
        }
        case Suite::Network: {
            const auto rep = verify_network(build_network(x, opt.rows, opt.cols));
            out.tallies["cells"] += rep.cells_checked;
            if (!rep.passed()) out.fail(first_failure(rep, network_part_name));
            break;
        }
        case Suite::ReverseAdjunction: {
            const OddNatural p(x);
            const auto q = reverse_next_odd(p);
            if (!q || next_odd(*q).value != p) out.fail("next_odd(reverse_next_odd(p)) != p");
            break;
        }
        case Suite::ReverseMinimality: {
            const OddNatural p(x);
            if (x >= (Natural(1) << 56)) {
                out.fail("outside the brute-force oracle's word range");
                break;
            }
            const auto pv = static_cast<std::uint64_t>(x);
            const auto brute = brute_force_predecessors(pv, 64 * pv);
            const auto smallest = reverse_next_odd(p);
            if (residue(x, 3) == 0) {
                if (!brute.empty()) out.fail("multiple of 3 has odd predecessor " + std::to_string(brute.front()));
                if (smallest) out.fail("reverse_next_odd defined on a multiple of 3");
                break;
            }
            if (brute.empty() || !smallest || smallest->value() != brute.front()) {
                out.fail("reverse_next_odd is not the smallest predecessor");
                break;
            }
            const auto listed = predecessors(p, brute.size());
            for (std::size_t i = 0; i < brute.size(); ++i) {
                if (listed[i].value() != brute[i]) {
                    out.fail("predecessor " + std::to_string(i) + " is " + std::to_string(brute[i]) + ", enumerated " +
                             listed[i].str());
                    break;
                }
            }
            break;
        }
        case Suite::Lemma3n1: {
            const auto rep = verify_3n1_lemma(OddNatural(x));
            if (!rep.passed()) out.fail(first_violation(rep));
            break;
        }
        case Suite::LemmaUnwind: {
            const auto rep = verify_unwind_lemma(OddNatural(x));
            if (!rep.passed()) out.fail(first_violation(rep));
            break;
        }
        case Suite::Triangle: {
            const auto t = build_triangle(OddNatural(x));
            const auto rep = verify_triangle(t);
            if (!rep.passed()) out.fail(first_failure(rep, triangle_part_name));
            for (std::size_t i = 1; i <= t.n(); ++i) {
                if (!(t.at(i, 0) < t.at(i - 1, 0))) {
                    out.fail("column 0 does not decrease at row " + std::to_string(i));
                    break;
                }
            }
            break;
        }
        case Suite::JumpCycle: {
            Natural b = x;
            static constexpr unsigned cycle[3] = {1, 2, 0};
            for (std::size_t i = 0; i < 3 * opt.cycle_periods; ++i) {
                b = 4 * b + 1;
                if (residue(b, 3) != cycle[i % 3]) {
                    out.fail("jump " + std::to_string(i + 1) + " is " + std::to_string(residue(b, 3)) + " mod 3");
                    break;
                }
            }
            break;
        }
        case Suite::BackwardRoundtrip: {
            const auto chain = extend_backward(OddNatural(x), opt.backward_depth);
            const auto rep = round_trip_check(chain, opt.odd_step_limit);
            if (!rep.edges.passed()) out.fail(first_violation(rep.edges));
            if (!rep.passes_back_through) out.fail("forward run does not retrace the chain");
            out.tallies["values_reaching_one"] += rep.values_reaching_one;
            out.tallies["values_hitting_limit"] += rep.values_hitting_limit;
            break;
        }
    }
}

struct ChunkResult {
    std::uint64_t checked = 0;
    std::vector<Failure> failures;
    std::map<std::string, std::uint64_t> tallies;
    bool complete = true;
};

/// Accelerated chains against odd terms of the raw trajectory, on an evenly
/// spread sample of the filtered inputs.
inline void corollary_oracle(const Natural& lo, std::uint64_t span, const SuiteOptions& opt, ChunkResult& out) {
    std::vector<Natural> sample;
    const std::uint64_t n = std::min<std::uint64_t>(opt.oracle_sample, span);
    for (std::uint64_t s = 0; s < n; ++s) {
        Natural x = lo + Natural(static_cast<std::uint64_t>((static_cast<unsigned __int128>(s) * span) / n));
        const Natural top = lo + Natural(span - 1);
        while (x <= top && !filter(Suite::CorollaryNextOdd, x)) ++x;
        if (x > top || (!sample.empty() && sample.back() >= x)) continue;
        sample.push_back(std::move(x));
    }
    for (const auto& x : sample) {
        ++out.tallies["oracle_samples"];
        const auto fast = odd_subsequence(OddNatural(x), opt.odd_step_limit + 1);
        const auto raw = odd_terms(collatz_sequence(x, opt.raw_step_limit));
        const std::size_t common = std::min(fast.terms.size(), raw.size());
        bool agree = true;
        for (std::size_t i = 0; agree && i < common; ++i) agree = fast.terms[i].value() == raw[i];
        if (agree && fast.termination == Termination::ReachedOne) agree = fast.terms.size() == raw.size();
        if (!agree) out.failures.push_back({x, "accelerated chain disagrees with raw trajectory"});
    }
}

}  // namespace detail

inline VerificationReport run_suite(Suite suite, const Natural& lo, const Natural& hi, const SuiteOptions& opt = {}) {
    if (lo.sign() < 0 || hi < lo) throw domain_error("run_suite: need 0 <= lo <= hi");
    const Natural span_n = hi - lo + 1;
    if (span_n > Natural(std::numeric_limits<std::uint64_t>::max())) {
        throw domain_error("run_suite: range too wide");
    }
    if (suite == Suite::Network && opt.rows > opt.cols) throw domain_error("run_suite: rows must not exceed cols");

    const auto started = std::chrono::steady_clock::now();
    const std::optional<std::chrono::steady_clock::time_point> deadline =
        opt.time_budget ? std::optional(started + *opt.time_budget) : std::nullopt;

    const auto span = static_cast<std::uint64_t>(span_n);
    constexpr std::uint64_t chunk_count_target = 256;
    const std::uint64_t chunk_size = std::max<std::uint64_t>(1, (span + chunk_count_target - 1) / chunk_count_target);
    const std::uint64_t chunks = (span + chunk_size - 1) / chunk_size;
    std::vector<detail::ChunkResult> results(chunks);
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<bool> out_of_time{false};

    auto worker = [&] {
        for (;;) {
            const std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= chunks) return;
            auto& res = results[c];
            if (out_of_time.load()) {
                res.complete = false;
                continue;
            }
            const std::uint64_t begin = c * chunk_size;
            const std::uint64_t end = std::min(span, begin + chunk_size);
            Natural x = lo + Natural(begin);
            for (std::uint64_t off = begin; off < end; ++off, ++x) {
                if (deadline && std::chrono::steady_clock::now() > *deadline) {
                    out_of_time = true;
                    res.complete = false;
                    break;
                }
                if (!detail::filter(suite, x)) continue;
                ++res.checked;
                detail::CaseResult one;
                detail::check_one(suite, x, opt, one);
                for (auto& f : one.failures) res.failures.push_back({x, std::move(f)});
                for (const auto& [key, count] : one.tallies) res.tallies[key] += count;
            }
        }
    };

    const std::size_t threads = std::max<std::size_t>(
        1, std::min<std::uint64_t>(opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency()), chunks));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    const auto& info = suite_info(suite);
    VerificationReport rep;
    rep.property_id = std::string(info.id);
    rep.lo = lo;
    rep.hi = hi;
    rep.filter = std::string(info.filter);
    for (auto& r : results) {
        rep.checked += r.checked;
        rep.complete = rep.complete && r.complete;
        for (auto& f : r.failures) rep.failures.push_back(std::move(f));
        for (const auto& [key, count] : r.tallies) rep.tallies[key] += count;
    }

    if (suite == Suite::CorollaryNextOdd && rep.complete) {
        detail::ChunkResult oracle;
        detail::corollary_oracle(lo, span, opt, oracle);
        for (auto& f : oracle.failures) rep.failures.push_back(std::move(f));
        for (const auto& [key, count] : oracle.tallies) rep.tallies[key] += count;
    }

    std::stable_sort(rep.failures.begin(), rep.failures.end(),
                     [](const Failure& a, const Failure& b) { return a.witness < b.witness; });
    rep.elapsed = std::chrono::steady_clock::now() - started;
    return rep;
}

}  // namespace collatz
