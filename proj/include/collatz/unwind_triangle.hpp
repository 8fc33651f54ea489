#pragma once

// The unwind triangle of an odd A = 2 mod 3.
//
// Row 0 walks v -> (v - 2) / 3 while the value stays 2 mod 3, ending at
// v_{0,n} != 2 mod 3. Column j then lists the first n + 1 - j reverse odd
// terms of v_{0,j}. With x = v_{0,n} + 1 the left column and the
// anti-diagonal have closed forms
//
//   v_{i,0}   = 3^(n-i) 2^i x - 1
//   v_{i,n-i} = 2^i x - 1

#include "collatz/check_report.hpp"
#include "collatz/reverse_collatz.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace collatz {

namespace triangle_part {
inline constexpr int reverse_columns = 1;
inline constexpr int relations = 2;
inline constexpr int closed_forms = 3;
}  // namespace triangle_part

/// Row i holds v_{i,0} .. v_{i,n-i}.
class UnwindTriangle {
public:
    UnwindTriangle(OddNatural apex, std::size_t n) : apex_(std::move(apex)), n_(n), cells_(n + 1) {
        for (std::size_t i = 0; i <= n; ++i) cells_[i].resize(n + 1 - i);
    }

    const OddNatural& apex() const noexcept { return apex_; }
    std::size_t n() const noexcept { return n_; }

    const Natural& at(std::size_t i, std::size_t j) const { return cells_.at(i).at(j); }
    Natural& at(std::size_t i, std::size_t j) { return cells_.at(i).at(j); }

    const std::vector<Natural>& row(std::size_t i) const { return cells_.at(i); }

private:
    OddNatural apex_;
    std::size_t n_;
    std::vector<std::vector<Natural>> cells_;
};

inline UnwindTriangle build_triangle(const OddNatural& a) {
    if (residue(a.value(), 3) != 2) throw domain_error("build_triangle: " + a.str() + " is not 2 mod 3");

    std::vector<Natural> top{a.value()};
    while (residue(top.back(), 3) == 2) top.push_back((top.back() - 2) / 3);
    const std::size_t n = top.size() - 1;

    UnwindTriangle t(a, n);
    for (std::size_t j = 0; j <= n; ++j) t.at(0, j) = top[j];
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 0; j + i <= n; ++j) {
            auto next = reverse_next_odd(OddNatural(t.at(i - 1, j)));
            if (!next) throw std::logic_error("build_triangle: reverse chain ended inside the triangle");
            t.at(i, j) = next->value();
        }
    }
    return t;
}

inline ArrayReport verify_triangle(const UnwindTriangle& t) {
    namespace part = triangle_part;
    ArrayReport rep;
    const std::size_t n = t.n();
    auto fail = [&](int p, std::size_t i, std::size_t j, std::string detail) {
        rep.failures.push_back({p, i, j, std::move(detail)});
    };

    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; i + j <= n; ++j) {
            const Natural& v = t.at(i, j);
            ++rep.cells_checked;
            if (!is_odd(v)) {
                fail(part::reverse_columns, i, j, "entry is even");
                continue;
            }
            const bool on_antidiagonal = (i + j == n);
            if ((residue(v, 3) == 2) == on_antidiagonal) {
                fail(part::reverse_columns, i, j,
                     on_antidiagonal ? "anti-diagonal entry is 2 mod 3" : "entry is not 2 mod 3");
            }
            if (j > 0 && t.at(i, j - 1) != 3 * v + 2) fail(part::reverse_columns, i, j, "row step is not (x - 2) / 3");
            if (i > 0) {
                const Natural& above = t.at(i - 1, j);
                const auto next = is_odd(above) ? reverse_next_odd(OddNatural(above)) : std::nullopt;
                if (!next || next->value() != v) fail(part::reverse_columns, i, j, "not the reverse odd successor");
                if (v != 2 * t.at(i - 1, j + 1) + 1) fail(part::relations, i, j, "v(i,j) != 2 v(i-1,j+1) + 1");
            }
        }
    }

    const unsigned corner = residue(t.at(0, n), 3);
    if (corner == 2) fail(part::relations, 0, n, "v(0,n) is 2 mod 3");
    if (corner != 2) {
        for (std::size_t i = 1; i <= n; ++i) {
            // corner 1: odd rows 0, even rows 1.  corner 0: odd rows 1, even rows 0.
            const unsigned expected = (i % 2 == 1) ? (corner == 1 ? 0u : 1u) : corner;
            if (residue(t.at(i, n - i), 3) != expected) {
                fail(part::relations, i, n - i, "anti-diagonal residue does not alternate");
            }
        }
    }

    const Natural x = t.at(0, n) + 1;
    for (std::size_t i = 0; i <= n; ++i) {
        if (t.at(i, 0) != pow3(n - i) * pow2(i) * x - 1) fail(part::closed_forms, i, 0, "v(i,0) != 3^(n-i) 2^i x - 1");
        if (t.at(i, n - i) != pow2(i) * x - 1) fail(part::closed_forms, i, n - i, "v(i,n-i) != 2^i x - 1");
    }

    rep.sort();
    return rep;
}

/// value = 3^a 2^b x - 1
struct ThreeTwoForm {
    std::size_t a;
    std::size_t b;
    Natural x;
    Natural reconstruct() const { return pow3(a) * pow2(b) * x - 1; }
};

/// value = 4^i 3^c B + 1
struct FourForm {
    std::size_t i;
    std::size_t c;
    Natural b;
    Natural reconstruct() const { return pow4(i) * pow3(c) * b + 1; }
};

struct DescentAnnotation {
    std::size_t index;
    OddNatural value;
    std::optional<ThreeTwoForm> three_two;
    std::optional<FourForm> four;
};

struct AnnotatedDescent {
    std::vector<DescentAnnotation> lines;
    ReverseTermination termination = ReverseTermination::StepLimit;
};

/// Walks the reverse odd chain of `a`, writing each term through the closed
/// forms that explain it. A run of terms = 2 mod 3 is the left column of an
/// unwind triangle, so each of them (and the term that ends the run) reads as
/// 3^a 2^b x - 1 with b the position in the run. A run of terms = 1 mod 3
/// (and the term ending it) reads as 4^i 3^c B + 1 with i the position in
/// that run. Every parameter is recovered from the value and its run position.
inline AnnotatedDescent annotate_descent(const OddNatural& a, std::size_t limit) {
    if (residue(a.value(), 3) == 0) throw domain_error("annotate_descent: " + a.str() + " is a multiple of 3");
    const auto chain = reverse_odd_chain(a, limit);
    AnnotatedDescent out;
    out.termination = chain.termination;

    std::size_t run2 = 0;
    std::size_t run1 = 0;
    std::optional<unsigned> prev;
    for (std::size_t idx = 0; idx < chain.terms.size(); ++idx) {
        const OddNatural& v = chain.terms[idx];
        const unsigned r = residue(v.value(), 3);
        DescentAnnotation line{idx, v, std::nullopt, std::nullopt};

        if (r == 2 || prev == 2u) {
            const Natural plus = v.value() + 1;
            const std::size_t e3 = valuation3(plus);
            const Natural scale = pow3(e3) * pow2(run2);
            ThreeTwoForm f{e3, run2, plus / scale};
            if (f.reconstruct() != v.value()) {
                throw std::logic_error("annotate_descent: " + v.str() + " has no 3^a 2^b x - 1 form at run position " +
                                       std::to_string(run2));
            }
            line.three_two = std::move(f);
        }
        if ((r == 1 || prev == 1u) && v != 1) {
            const Natural minus = v.value() - 1;
            const std::size_t e3 = valuation3(minus);
            const Natural scale = pow4(run1) * pow3(e3);
            FourForm f{run1, e3, minus / scale};
            if (f.reconstruct() != v.value()) {
                throw std::logic_error("annotate_descent: " + v.str() + " has no 4^i 3^c B + 1 form at run position " +
                                       std::to_string(run1));
            }
            line.four = std::move(f);
        }

        run2 = (r == 2) ? run2 + 1 : 0;
        run1 = (r == 1) ? run1 + 1 : 0;
        prev = r;
        out.lines.push_back(std::move(line));
    }
    return out;
}

}  // namespace collatz
