#pragma once

// Backward extension of odd chains: step to the smallest odd predecessor
// when one exists, and jump (A -> 4A + 1) past multiples of 3, whose
// trajectories have no odd predecessor but share their next odd term with
// every jump above them.

#include "collatz/check_report.hpp"
#include "collatz/core_sequences.hpp"
#include "collatz/reverse_collatz.hpp"

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace collatz {

enum class Edge { Predecessor, Jump };

inline char edge_tag(Edge e) { return e == Edge::Predecessor ? 'P' : 'J'; }

struct BackwardLink {
    OddNatural value;
    Edge edge;
    std::size_t height = 0;  // jump height, 0 for predecessor edges
};

/// Values listed from the anchor outward, i.e. backward in Collatz time.
struct BackwardChain {
    OddNatural anchor;
    std::vector<BackwardLink> links;

    std::size_t depth() const noexcept { return links.size(); }
    const OddNatural& outermost() const { return links.empty() ? anchor : links.back().value; }
    const OddNatural& value_before(std::size_t link) const { return link == 0 ? anchor : links[link - 1].value; }
};

struct BackwardStrategy {
    enum class Kind { SmallestPredecessor, JumpHeight };
    Kind kind = Kind::SmallestPredecessor;
    std::size_t height = 1;

    static BackwardStrategy smallest() { return {}; }
    static BackwardStrategy jump(std::size_t h) {
        if (h == 0) throw domain_error("jump strategy height must be >= 1");
        return {Kind::JumpHeight, h};
    }

    /// "smallest" or "jump:H".
    static BackwardStrategy parse(std::string_view text) {
        if (text == "smallest") return smallest();
        constexpr std::string_view prefix = "jump:";
        if (text.substr(0, prefix.size()) == prefix) {
            const auto digits = text.substr(prefix.size());
            std::size_t h = 0;
            const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), h);
            if (ec == std::errc{} && ptr == digits.data() + digits.size() && h > 0) return jump(h);
        }
        throw domain_error("unknown backward strategy '" + std::string(text) + "' (expected smallest or jump:H)");
    }

    std::string str() const {
        return kind == Kind::SmallestPredecessor ? "smallest" : "jump:" + std::to_string(height);
    }
};

/// The `count` smallest odd q with next_odd(q) == p, ascending.
inline std::vector<OddNatural> predecessors(const OddNatural& p, std::size_t count) {
    std::vector<OddNatural> out;
    auto first = reverse_next_odd(p);
    if (!first || count == 0) return out;
    out.reserve(count);
    out.push_back(std::move(*first));
    while (out.size() < count) out.push_back(OddNatural(4 * out.back().value() + 1));
    return out;
}

inline BackwardChain extend_backward(const OddNatural& anchor, std::size_t depth,
                                     const BackwardStrategy& strategy = BackwardStrategy::smallest()) {
    BackwardChain chain{anchor, {}};
    chain.links.reserve(depth);
    while (chain.links.size() < depth) {
        const OddNatural& current = chain.outermost();
        // At 1 the smallest predecessor is 1 itself, so jump out of the fixed point.
        if (current == 1 || residue(current.value(), 3) == 0) {
            const std::size_t h = strategy.kind == BackwardStrategy::Kind::JumpHeight ? strategy.height : 1;
            chain.links.push_back({jump_value(current, h), Edge::Jump, h});
        } else {
            chain.links.push_back({*reverse_next_odd(current), Edge::Predecessor, 0});
        }
    }
    return chain;
}

struct RoundTripReport {
    CheckReport edges;
    bool outermost_reaches_one = false;
    bool passes_back_through = false;
    std::size_t forward_terms = 0;
    std::size_t values_reaching_one = 0;
    std::size_t values_hitting_limit = 0;

    bool passed() const { return edges.passed() && passes_back_through; }
};

/// Checks every edge, then runs forward from the outermost value and
/// confirms it revisits the chain, skipping jump bases, in reverse order.
/// Whether each chain value's own forward chain reaches 1 within
/// `step_limit` odd steps is tallied, not asserted.
inline RoundTripReport round_trip_check(const BackwardChain& chain, std::size_t step_limit) {
    RoundTripReport rep;
    for (std::size_t k = 0; k < chain.links.size(); ++k) {
        const OddNatural& inner = chain.value_before(k);
        const BackwardLink& link = chain.links[k];
        if (link.edge == Edge::Predecessor) {
            const auto forward = next_odd(link.value).value;
            if (forward != inner) {
                rep.edges.fail("predecessor", k, "next odd after " + link.value.str() + " is " + forward.str() +
                                                     ", expected " + inner.str());
            }
        } else {
            if (link.height == 0 || link.value != jump_value(inner, link.height)) {
                rep.edges.fail("jump_value", k, link.value.str() + " is not a jump of height " +
                                                    std::to_string(link.height) + " from " + inner.str());
            }
            if (!equivalent(inner, link.value)) {
                rep.edges.fail("jump_equivalence", k, inner.str() + " and " + link.value.str() + " are not equivalent");
            }
            if (link.height == 1 && residue(inner.value(), 3) == 0 && residue(link.value.value(), 3) != 1) {
                rep.edges.fail("jump_residue", k, "jump from a multiple of 3 is not 1 mod 3");
            }
        }
    }

    // Values the forward run must visit: the outermost, then every value
    // entered from outside through a predecessor edge.
    std::vector<const OddNatural*> expected{&chain.outermost()};
    for (std::size_t k = chain.links.size(); k-- > 0;) {
        if (chain.links[k].edge == Edge::Predecessor) expected.push_back(&chain.value_before(k));
    }
    const auto forward = odd_subsequence(chain.outermost(), step_limit + 1);
    rep.forward_terms = forward.terms.size();
    rep.outermost_reaches_one = forward.termination == Termination::ReachedOne;
    rep.passes_back_through = forward.terms.size() >= expected.size();
    for (std::size_t s = 0; rep.passes_back_through && s < expected.size(); ++s) {
        rep.passes_back_through = forward.terms[s] == *expected[s];
    }

    auto tally = [&](const OddNatural& v) {
        const auto run = odd_subsequence(v, step_limit + 1);
        if (run.termination == Termination::ReachedOne) {
            ++rep.values_reaching_one;
        } else {
            ++rep.values_hitting_limit;
        }
    };
    tally(chain.anchor);
    for (const auto& link : chain.links) tally(link.value);
    return rep;
}

}  // namespace collatz
