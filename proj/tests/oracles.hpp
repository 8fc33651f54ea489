#pragma once

// Reference implementations used only by the tests. They work on machine
// words with the most literal reading of each definition (raw halving, no
// valuation shortcuts), so they share no code path with the library.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

/// Raw trajectory up to and including the first 1.
inline std::vector<u64> raw_sequence(u64 a, std::size_t limit = 1'000'000) {
    std::vector<u64> out{a};
    while (out.back() != 1 && out.size() <= limit) {
        const u64 c = out.back();
        out.push_back(c % 2 == 1 ? 3 * c + 1 : c / 2);
    }
    return out;
}

/// Odd terms of the raw trajectory, stopping at the first 1.
inline std::vector<u64> odd_terms(u64 a) {
    std::vector<u64> out;
    for (u64 c : raw_sequence(a)) {
        if (c % 2 == 1) out.push_back(c);
    }
    return out;
}

/// Next odd term by literal halving; also returns the number of halvings.
inline std::pair<u64, unsigned> next_odd(u64 a) {
    u64 x = 3 * a + 1;
    unsigned k = 0;
    while (x % 2 == 0) {
        x /= 2;
        ++k;
    }
    return {x, k};
}

/// `count` odd terms, continuing through the 1 -> 1 fixed point.
inline std::vector<u64> odd_prefix(u64 a, std::size_t count) {
    std::vector<u64> out{a};
    while (out.size() < count) out.push_back(next_odd(out.back()).first);
    return out;
}

/// Tail length from the binary digit string.
inline unsigned tail_length(u64 a) {
    unsigned ones = 0;
    while (a & 1) {
        ++ones;
        a >>= 1;
    }
    return ones - 1;
}

/// 4^h P + 4^(h-1) + ... + 4 + 1 summed term by term.
inline u64 jump(u64 p, unsigned h) {
    u64 v = p;
    for (unsigned i = 0; i < h; ++i) v = 4 * v + 1;
    return v;
}

/// Smallest odd q < bound with next_odd(q) == p, by exhaustive search.
inline std::optional<u64> smallest_odd_predecessor(u64 p, u64 bound) {
    for (u64 q = 1; q < bound; q += 2) {
        if (next_odd(q).first == p) return q;
    }
    return std::nullopt;
}

inline std::vector<u64> odd_predecessors(u64 p, u64 bound) {
    std::vector<u64> out;
    for (u64 q = 1; q < bound; q += 2) {
        if (next_odd(q).first == p) out.push_back(q);
    }
    return out;
}

/// Reverse step by the piecewise definition.
inline u64 reverse_step(u64 r) {
    if (r % 2 == 0 && r % 3 == 1) return (r - 1) / 3;
    return 2 * r;
}

/// Odd terms of the full reverse sequence after `steps` steps.
inline std::vector<u64> reverse_odd_terms(u64 a, std::size_t steps) {
    std::vector<u64> out;
    u64 r = a;
    for (std::size_t s = 0; s <= steps; ++s) {
        if (r % 2 == 1) out.push_back(r);
        if (s < steps) r = reverse_step(r);
    }
    return out;
}

inline u64 ipow(u64 b, unsigned e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

/// Fixed-seed generator of odd numbers in [1, max].
class OddGen {
public:
    explicit OddGen(u64 seed, u64 max) : rng_(seed), dist_(0, (max - 1) / 2) {}
    u64 operator()() { return 2 * dist_(rng_) + 1; }

private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<u64> dist_;
};

}  // namespace oracle
