#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace collatz {

enum class Verdict { Pass, Fail, NotApplicable };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not_applicable";
    }
    return "?";
}

/// One failed relation. `index` is the step or edge the check is about.
struct Violation {
    std::string check;
    std::size_t index = 0;
    std::string detail;
};

/// Outcome of checking one lemma or construction on a single input.
struct CheckReport {
    Verdict verdict = Verdict::Pass;
    std::vector<Violation> violations;

    bool passed() const noexcept { return verdict == Verdict::Pass; }

    void fail(std::string check, std::size_t index, std::string detail) {
        verdict = Verdict::Fail;
        violations.push_back({std::move(check), index, std::move(detail)});
    }

    static CheckReport not_applicable(std::string why) {
        CheckReport r;
        r.verdict = Verdict::NotApplicable;
        r.violations.push_back({"precondition", 0, std::move(why)});
        return r;
    }
};

/// A failure located in a two-dimensional array, tagged with the property it
/// breaks. Used by the network array and the unwind triangle.
struct CellFailure {
    int part = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    std::string detail;

    friend bool operator==(const CellFailure& a, const CellFailure& b) {
        return std::tie(a.part, a.i, a.j, a.detail) == std::tie(b.part, b.i, b.j, b.detail);
    }
};

struct ArrayReport {
    std::vector<CellFailure> failures;
    std::size_t cells_checked = 0;

    bool passed() const noexcept { return failures.empty(); }

    bool has_failure(int part, std::size_t i, std::size_t j) const {
        return std::any_of(failures.begin(), failures.end(), [&](const CellFailure& f) {
            return f.part == part && f.i == i && f.j == j;
        });
    }

    /// Orders failures by (part, i, j) so reports are reproducible.
    void sort() {
        std::stable_sort(failures.begin(), failures.end(), [](const CellFailure& a, const CellFailure& b) {
            return std::tie(a.part, a.i, a.j) < std::tie(b.part, b.i, b.j);
        });
    }
};

}  // namespace collatz
