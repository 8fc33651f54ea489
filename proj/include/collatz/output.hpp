#pragma once

// Text renderings shared by the command-line front end: comma lists,
// aligned tables, closed-form strings and the JSON/CSV document envelope.

#include "collatz/natural.hpp"
#include "collatz/unwind_triangle.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace collatz {

inline constexpr std::string_view library_version = "1.0.0";

enum class Format { Table, Json, Csv };

inline Format parse_format(std::string_view s) {
    if (s == "table") return Format::Table;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw domain_error("unknown format '" + std::string(s) + "'");
}

/// One command's output in all three renderings; numbers inside `result`
/// are decimal strings so arbitrary precision survives any JSON consumer.
struct OutputDocument {
    std::string command;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    nlohmann::ordered_json result = nlohmann::ordered_json::object();
    std::string table{};
    std::string csv{};

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json doc;
        doc["command"] = command;
        doc["parameters"] = parameters;
        doc["version"] = std::string(library_version);
        doc["result"] = result;
        return doc;
    }

    std::string render(Format f) const {
        switch (f) {
            case Format::Table: return table;
            case Format::Csv: return csv;
            case Format::Json: return to_json().dump(2) + "\n";
        }
        return {};
    }
};

inline std::string dec(const Natural& x) { return x.str(); }
inline std::string dec(const OddNatural& x) { return x.str(); }
inline std::string dec(std::size_t x) { return std::to_string(x); }

template <class Range>
nlohmann::ordered_json dec_array(const Range& values) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : values) arr.push_back(dec(v));
    return arr;
}

template <class Range>
std::string join(const Range& values, std::string_view sep = ", ") {
    std::string out;
    bool first = true;
    for (const auto& v : values) {
        if (!first) out += sep;
        out += dec(v);
        first = false;
    }
    return out;
}

/// Grid of optional cells. Columns are padded to their widest cell; the
/// label column is always left-aligned and trailing blanks are trimmed.
class TextGrid {
public:
    enum class Align { Left, Right };

    explicit TextGrid(Align align, std::string gap = "  ") : align_(align), gap_(std::move(gap)) {}

    void add_row(std::string label, std::vector<std::string> cells) {
        rows_.push_back({std::move(label), std::move(cells)});
    }

    std::string str() const {
        std::size_t label_w = 0;
        std::vector<std::size_t> widths;
        for (const auto& r : rows_) {
            label_w = std::max(label_w, r.label.size());
            if (r.cells.size() > widths.size()) widths.resize(r.cells.size(), 0);
            for (std::size_t c = 0; c < r.cells.size(); ++c) widths[c] = std::max(widths[c], r.cells[c].size());
        }
        std::string out;
        for (const auto& r : rows_) {
            std::string line = r.label + std::string(label_w - r.label.size(), ' ');
            for (std::size_t c = 0; c < r.cells.size(); ++c) {
                const auto& cell = r.cells[c];
                const std::string pad(widths[c] - cell.size(), ' ');
                line += gap_;
                line += align_ == Align::Right ? pad + cell : cell + pad;
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out += line;
            out += '\n';
        }
        return out;
    }

private:
    struct Row {
        std::string label;
        std::vector<std::string> cells;
    };
    Align align_;
    std::string gap_;
    std::vector<Row> rows_;
};

inline std::string power(std::string_view base, std::size_t e) {
    if (e == 1) return std::string(base);
    return std::string(base) + "^" + std::to_string(e);
}

/// "3^a * 2^b * x - 1", leaving out factors with exponent 0.
inline std::string render(const ThreeTwoForm& f) {
    std::vector<std::string> factors;
    if (f.a > 0) factors.push_back(power("3", f.a));
    if (f.b > 0) factors.push_back(power("2", f.b));
    factors.push_back(f.x.str());
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " * " : "") + factors[i];
    return out + " - 1";
}

/// "4^i * 3^c * B + 1", leaving out factors with exponent 0.
inline std::string render(const FourForm& f) {
    std::vector<std::string> factors;
    if (f.i > 0) factors.push_back(power("4", f.i));
    if (f.c > 0) factors.push_back(power("3", f.c));
    factors.push_back(f.b.str());
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " * " : "") + factors[i];
    return out + " + 1";
}

}  // namespace collatz
