#pragma once

// Arbitrary-precision naturals and the bit/digit helpers every module leans on.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace collatz {

/// Arbitrary-precision integer used for every sequence value.
///
/// The backend is signed, but all library entry points reject negative
/// inputs and no operation subtracts below zero, so values stay natural.
using Natural = boost::multiprecision::cpp_int;

/// Raised when an argument violates an operation's precondition
/// (zero start, even value where an odd one is required, wrong residue, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a bounded search runs out of steps where the theory says it
/// cannot. Indicates an internal consistency failure, not bad input.
class step_limit_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_odd(const Natural& x) { return boost::multiprecision::bit_test(x, 0); }
inline bool is_even(const Natural& x) { return !is_odd(x); }

/// x mod m for small positive m.
inline unsigned residue(const Natural& x, unsigned m) {
    return static_cast<unsigned>(x % m);
}

/// 2-adic valuation (trailing zero bits). x must be positive.
inline std::size_t valuation2(const Natural& x) {
    if (x.is_zero()) throw domain_error("valuation2: zero has no finite 2-adic valuation");
    return static_cast<std::size_t>(boost::multiprecision::lsb(x));
}

/// Number of trailing one bits; 0 for even x.
inline std::size_t trailing_ones(const Natural& x) {
    std::size_t count = 0;
    while (boost::multiprecision::bit_test(x, static_cast<unsigned>(count))) ++count;
    return count;
}

/// 3-adic valuation. x must be positive.
inline std::size_t valuation3(Natural x) {
    if (x.is_zero()) throw domain_error("valuation3: zero has no finite 3-adic valuation");
    std::size_t count = 0;
    Natural q, r;
    for (;;) {
        boost::multiprecision::divide_qr(x, Natural(3), q, r);
        if (!r.is_zero()) return count;
        x = std::move(q);
        ++count;
    }
}

inline Natural pow2(std::size_t e) { return Natural(1) << e; }
inline Natural pow3(std::size_t e) { return boost::multiprecision::pow(Natural(3), static_cast<unsigned>(e)); }
inline Natural pow4(std::size_t e) { return Natural(1) << (2 * e); }

/// Parses a plain decimal literal ("0", "911", "123456789012345678901234567890").
/// Signs, whitespace, and other bases are rejected.
inline Natural parse_natural(std::string_view text) {
    if (text.empty()) throw domain_error("expected a decimal natural number, got an empty string");
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw domain_error("expected a decimal natural number, got '" + std::string(text) + "'");
        }
    }
    return Natural(std::string(text));
}

inline std::string to_decimal(const Natural& x) { return x.str(); }

/// A natural number that is odd (hence >= 1).
class OddNatural {
public:
    explicit OddNatural(Natural value) : value_(std::move(value)) {
        if (value_.sign() < 0 || !is_odd(value_)) {
            throw domain_error("expected an odd natural number, got " + value_.str());
        }
    }
    explicit OddNatural(std::uint64_t value) : OddNatural(Natural(value)) {}

    const Natural& value() const noexcept { return value_; }
    operator const Natural&() const noexcept { return value_; }

    std::string str() const { return value_.str(); }

    friend bool operator==(const OddNatural& a, const OddNatural& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const OddNatural& a, const OddNatural& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const OddNatural& a, std::uint64_t b) { return a.value_ == b; }

private:
    Natural value_;
};

inline std::ostream& operator<<(std::ostream& os, const OddNatural& x) { return os << x.value(); }

}  // namespace collatz
