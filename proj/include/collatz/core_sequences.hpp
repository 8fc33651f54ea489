#pragma once

// Forward Collatz dynamics: the raw trajectory, the accelerated odd chain,
// binary tails, jumps and the equivalence relation they induce.

#include "collatz/check_report.hpp"
#include "collatz/natural.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace collatz {

enum class Termination { ReachedOne, StepLimit };

inline const char* to_string(Termination t) {
    return t == Termination::ReachedOne ? "reached_one" : "step_limit";
}

/// Default iteration bounds. Termination is never assumed.
inline constexpr std::size_t default_raw_step_limit = 1'000'000;
inline constexpr std::size_t default_odd_step_limit = 100'000;

struct CollatzTrace {
    Natural start;
    std::vector<Natural> terms;
    Termination termination = Termination::StepLimit;
    std::size_t steps = 0;
};

struct OddStep {
    OddNatural value;
    std::size_t valuation;
};

/// Odd subsequence of a trajectory. valuations[i] is the k with
/// terms[i+1] * 2^k == 3 * terms[i] + 1.
struct OddChain {
    OddNatural start;
    std::vector<OddNatural> terms;
    std::vector<std::size_t> valuations;
    Termination termination = Termination::StepLimit;
};

/// value = sum(2^e for e in head_exponents) + 2^(tail_length+1) - 1.
struct TailInfo {
    OddNatural value;
    std::size_t tail_length;
    std::vector<std::size_t> head_exponents;  // strictly decreasing, all > tail_length + 1
};

/// value = 4^height * base + (4^height - 1) / 3.
struct JumpDescriptor {
    OddNatural base;
    std::size_t height;
    OddNatural value;
};

struct TailDescent {
    CheckReport report;
    std::vector<OddNatural> chain;        // a_0 .. a_n
    std::vector<std::size_t> tail_lengths;  // tail length of each a_i
};

inline Natural collatz_next(const Natural& c) {
    if (c.sign() <= 0) throw domain_error("collatz_next: value must be >= 1");
    if (is_odd(c)) return 3 * c + 1;
    return c >> 1;
}

/// Iterates until the first 1 or until `step_limit` steps have been taken.
inline CollatzTrace collatz_sequence(const Natural& start, std::size_t step_limit) {
    if (start.sign() <= 0) throw domain_error("collatz_sequence: start must be >= 1");
    CollatzTrace trace{start, {start}, Termination::StepLimit, 0};
    while (trace.terms.back() != 1 && trace.steps < step_limit) {
        trace.terms.push_back(collatz_next(trace.terms.back()));
        ++trace.steps;
    }
    if (trace.terms.back() == 1) trace.termination = Termination::ReachedOne;
    return trace;
}

/// One accelerated step A -> (3A+1)/2^k. next_odd(1) == (1, 2).
inline OddStep next_odd(const OddNatural& a) {
    Natural x = 3 * a.value() + 1;
    const std::size_t k = valuation2(x);
    x >>= k;
    return {OddNatural(std::move(x)), k};
}

/// Emits at most `max_terms` odd terms, stopping at the first 1.
inline OddChain odd_subsequence(const OddNatural& start, std::size_t max_terms) {
    if (max_terms == 0) throw domain_error("odd_subsequence: max_terms must be >= 1");
    OddChain chain{start, {start}, {}, Termination::StepLimit};
    while (chain.terms.back() != 1 && chain.terms.size() < max_terms) {
        auto step = next_odd(chain.terms.back());
        chain.valuations.push_back(step.valuation);
        chain.terms.push_back(std::move(step.value));
    }
    if (chain.terms.back() == 1) chain.termination = Termination::ReachedOne;
    return chain;
}

/// Odd terms of the raw trajectory, in order, up to the first 1.
inline std::vector<Natural> odd_terms(const CollatzTrace& trace) {
    std::vector<Natural> out;
    for (const auto& t : trace.terms) {
        if (is_odd(t)) out.push_back(t);
    }
    return out;
}

inline std::size_t tail_length(const OddNatural& a) {
    return trailing_ones(a.value()) - 1;
}

inline TailInfo tail_info(const OddNatural& a) {
    const std::size_t ones = trailing_ones(a.value());
    TailInfo info{a, ones - 1, {}};
    // Bit `ones` is zero by definition, so every remaining set bit is above it.
    const auto top = static_cast<std::size_t>(boost::multiprecision::msb(a.value()));
    for (std::size_t e = top + 1; e-- > ones + 1;) {
        if (boost::multiprecision::bit_test(a.value(), static_cast<unsigned>(e))) {
            info.head_exponents.push_back(e);
        }
    }
    return info;
}

/// Checks that the first n odd successors of an A with tail length n >= 1
/// each take exactly one halving and shed one tail bit, and that
/// 2^i (a_i + 1) == 3^i (A + 1).
inline TailDescent verify_tail_descent(const OddNatural& a) {
    const std::size_t n = tail_length(a);
    TailDescent out{{}, {a}, {n}};
    if (n == 0) {
        out.report = CheckReport::not_applicable("tail length is 0");
        return out;
    }
    const Natural base = a.value() + 1;
    for (std::size_t i = 1; i <= n; ++i) {
        auto step = next_odd(out.chain.back());
        const std::size_t len = tail_length(step.value);
        if (step.valuation != 1) {
            out.report.fail("valuation_is_one", i, "valuation " + std::to_string(step.valuation));
        }
        if (len != n - i) {
            out.report.fail("tail_shrinks", i, "tail length " + std::to_string(len) + ", expected " +
                                                   std::to_string(n - i));
        }
        if (pow2(i) * (step.value.value() + 1) != pow3(i) * base) {
            out.report.fail("closed_form", i, "2^i (a_i + 1) != 3^i (A + 1) for a_i = " + step.value.str());
        }
        out.tail_lengths.push_back(len);
        out.chain.push_back(std::move(step.value));
    }
    return out;
}

inline OddNatural jump_value(const OddNatural& base, std::size_t height) {
    if (height == 0) throw domain_error("jump_value: height must be >= 1");
    const Natural scale = pow4(height);
    return OddNatural(scale * base.value() + (scale - 1) / 3);
}

/// Every way to read `a` as a jump: from (a-1)/4 at height 1, from the base
/// below that at height 2, and so on while the bases stay odd.
inline std::vector<JumpDescriptor> jump_decompose(const OddNatural& a) {
    std::vector<JumpDescriptor> out;
    Natural current = a.value();
    std::size_t height = 0;
    while (residue(current, 4) == 1) {
        Natural below = (current - 1) >> 2;
        if (!is_odd(below)) break;
        ++height;
        out.push_back({OddNatural(below), height, a});
        current = std::move(below);
    }
    return out;
}

/// Two odd starts are equivalent when their trajectories share the second odd term.
inline bool equivalent(const OddNatural& a, const OddNatural& b) {
    return next_odd(a).value == next_odd(b).value;
}

}  // namespace collatz
