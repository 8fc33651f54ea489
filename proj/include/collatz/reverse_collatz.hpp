#pragma once

// Reverse Collatz sequences. The full sequence halves-and-shifts back through
// (r-1)/3 whenever r is even and r = 1 mod 3 and doubles otherwise; its odd
// terms follow
//
//   p -> (2p - 1) / 3   if p = 2 mod 3
//   p -> (4p - 1) / 3   if p = 1 mod 3
//   p -> (none)         if p = 0 mod 3
//
// which is the smallest odd number whose trajectory reaches p next.

#include "collatz/check_report.hpp"
#include "collatz/core_sequences.hpp"

#include <optional>
#include <string>
#include <vector>

namespace collatz {

enum class ReverseTermination { ReachedMultipleOf3, StepLimit };

inline const char* to_string(ReverseTermination t) {
    return t == ReverseTermination::ReachedMultipleOf3 ? "multiple_of_3" : "step_limit";
}

struct ReverseTrace {
    Natural start;
    std::vector<Natural> terms;
};

struct ReverseOddChain {
    OddNatural start;
    std::vector<OddNatural> terms;
    ReverseTermination termination = ReverseTermination::StepLimit;
};

/// a = 3^n * b + 1 with 3 not dividing b.
struct Pow3Decomposition {
    OddNatural a;
    std::size_t n;
    Natural b;
};

inline Natural reverse_step(const Natural& r) {
    if (r.sign() <= 0) throw domain_error("reverse_step: value must be >= 1");
    if (is_even(r) && residue(r, 3) == 1) return (r - 1) / 3;
    return 2 * r;
}

/// Exactly `limit` steps; the full sequence never stops on its own.
inline ReverseTrace reverse_sequence(const Natural& start, std::size_t limit) {
    if (start.sign() <= 0) throw domain_error("reverse_sequence: start must be >= 1");
    ReverseTrace trace{start, {start}};
    trace.terms.reserve(limit + 1);
    for (std::size_t s = 0; s < limit; ++s) trace.terms.push_back(reverse_step(trace.terms.back()));
    return trace;
}

inline std::optional<OddNatural> reverse_next_odd(const OddNatural& p) {
    switch (residue(p.value(), 3)) {
        case 2: return OddNatural((2 * p.value() - 1) / 3);
        case 1: return OddNatural((4 * p.value() - 1) / 3);
        default: return std::nullopt;
    }
}

/// Follows reverse_next_odd until a multiple of 3 or `limit` steps.
inline ReverseOddChain reverse_odd_chain(const OddNatural& start, std::size_t limit) {
    ReverseOddChain chain{start, {start}, ReverseTermination::StepLimit};
    for (std::size_t s = 0;; ++s) {
        if (residue(chain.terms.back().value(), 3) == 0) {
            chain.termination = ReverseTermination::ReachedMultipleOf3;
            break;
        }
        if (s == limit) break;
        chain.terms.push_back(*reverse_next_odd(chain.terms.back()));
    }
    return chain;
}

inline Pow3Decomposition decompose_pow3(const OddNatural& a) {
    if (residue(a.value(), 3) != 1) throw domain_error("decompose_pow3: " + a.str() + " is not 1 mod 3");
    if (a == 1) throw domain_error("decompose_pow3: 1 = 3^n * 0 + 1 has no cofactor prime to 3");
    const Natural shifted = a.value() - 1;
    const std::size_t n = valuation3(shifted);
    return {a, n, shifted / pow3(n)};
}

/// For a = 3^n b + 1: r_i = 4^i 3^(n-i) b + 1 for i = 0..n, r_i = 1 mod 3 before
/// the last, r_n = 2 or 0 mod 3 as b = 1 or 2 mod 3, and the r_i increase.
inline CheckReport verify_3n1_lemma(const OddNatural& a) {
    const auto dec = decompose_pow3(a);
    CheckReport rep;
    std::vector<OddNatural> r{a};
    for (std::size_t i = 1; i <= dec.n; ++i) {
        auto next = reverse_next_odd(r.back());
        if (!next) {
            rep.fail("chain_exists", i, "r_" + std::to_string(i - 1) + " is a multiple of 3");
            return rep;
        }
        r.push_back(std::move(*next));
    }
    for (std::size_t i = 0; i <= dec.n; ++i) {
        const Natural expected = pow4(i) * pow3(dec.n - i) * dec.b + 1;
        if (r[i].value() != expected) {
            rep.fail("closed_form", i, "r_i = " + r[i].str() + ", expected " + expected.str());
        }
        if (i < dec.n && residue(r[i].value(), 3) != 1) rep.fail("residue_before_last", i, "r_i != 1 mod 3");
        if (i > 0 && !(r[i - 1] < r[i])) rep.fail("increasing", i, "r_i <= r_{i-1}");
    }
    const unsigned last = residue(r[dec.n].value(), 3);
    const unsigned b3 = residue(dec.b, 3);
    if ((b3 == 1 && last != 2) || (b3 == 2 && last != 0)) {
        rep.fail("last_residue", dec.n,
                 "r_n = " + std::to_string(last) + " mod 3 with B = " + std::to_string(b3) + " mod 3");
    }
    return rep;
}

/// For a = 2 mod 3 and u = (a-2)/3: the next reverse odd term is 2u + 1, its
/// residue is fixed by u mod 3, it is smaller than a, and when u = 2 mod 3
/// the reverse step from u lands on (r_1 - 2) / 3.
inline CheckReport verify_unwind_lemma(const OddNatural& a) {
    if (residue(a.value(), 3) != 2) throw domain_error("verify_unwind_lemma: " + a.str() + " is not 2 mod 3");
    CheckReport rep;
    const Natural u = (a.value() - 2) / 3;
    const auto r1 = reverse_next_odd(a);
    const Natural expected = 2 * u + 1;
    if (!r1 || r1->value() != expected) {
        rep.fail("r1_is_2u_plus_1", 1, "reverse step gives " + (r1 ? r1->str() : std::string("none")));
        return rep;
    }
    static constexpr unsigned residue_of_r1[3] = {1, 0, 2};
    const unsigned u3 = residue(u, 3);
    if (residue(r1->value(), 3) != residue_of_r1[u3]) {
        rep.fail("residue_map", 1, "u = " + std::to_string(u3) + " mod 3 but r_1 = " +
                                       std::to_string(residue(r1->value(), 3)) + " mod 3");
    }
    if (!(*r1 < a)) rep.fail("r1_below_r0", 1, "r_1 >= r_0");
    if (u3 == 2) {
        // a - 2 is odd, so u is odd.
        if (!is_odd(u)) {
            rep.fail("t1", 1, "u is even");
        } else {
            const auto t1 = reverse_next_odd(OddNatural(u));
            if (!t1 || t1->value() != (r1->value() - 2) / 3) rep.fail("t1", 1, "t_1 != (r_1 - 2) / 3");
        }
    }
    return rep;
}

}  // namespace collatz
