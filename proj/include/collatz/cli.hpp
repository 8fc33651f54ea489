#pragma once

// Command-line front end. `dispatch` is callable in-process so the golden
// tests exercise exactly what the binary prints.
//
// Exit codes: 0 success, 1 a verification found failures, 2 usage error.

#include "collatz/backward_explorer.hpp"
#include "collatz/core_sequences.hpp"
#include "collatz/merge_analysis.hpp"
#include "collatz/network_array.hpp"
#include "collatz/output.hpp"
#include "collatz/reverse_collatz.hpp"
#include "collatz/unwind_triangle.hpp"
#include "collatz/verification_harness.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace collatz::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failures = 1;
inline constexpr int exit_usage = 2;

/// Default step limit for `seq` and `odd`, overridable through COLLATZ_STEP_LIMIT.
inline std::size_t env_step_limit(std::size_t fallback) {
    if (const char* env = std::getenv("COLLATZ_STEP_LIMIT"); env && *env) {
        return static_cast<std::size_t>(parse_natural(env));
    }
    return fallback;
}

inline std::pair<Natural, Natural> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw domain_error("range must look like LO..HI, got '" + text + "'");
    Natural lo = parse_natural(text.substr(0, dots));
    Natural hi = parse_natural(text.substr(dots + 2));
    if (hi < lo) throw domain_error("range " + text + " is empty");
    return {std::move(lo), std::move(hi)};
}

inline OddNatural parse_odd(const std::string& text) { return OddNatural(parse_natural(text)); }

inline Natural parse_positive(const std::string& text) {
    Natural x = parse_natural(text);
    if (x.is_zero()) throw domain_error("expected a positive integer, got 0");
    return x;
}

namespace render {

inline std::string limit_note(bool hit_limit, std::size_t limit) {
    return hit_limit ? "(stopped at step limit " + std::to_string(limit) + ")\n" : std::string{};
}

inline OutputDocument sequence(const CollatzTrace& t, std::size_t limit) {
    OutputDocument doc{"seq"};
    doc.parameters = {{"start", dec(t.start)}, {"limit", dec(limit)}};
    doc.result = {{"terms", dec_array(t.terms)}, {"termination", to_string(t.termination)}, {"steps", dec(t.steps)}};
    doc.table = join(t.terms) + "\n" + limit_note(t.termination == Termination::StepLimit, limit);
    doc.csv = "index,value\n";
    for (std::size_t i = 0; i < t.terms.size(); ++i) doc.csv += std::to_string(i) + "," + dec(t.terms[i]) + "\n";
    return doc;
}

inline OutputDocument odd_chain(const OddChain& c, std::size_t limit) {
    OutputDocument doc{"odd"};
    doc.parameters = {{"start", dec(c.start)}, {"limit", dec(limit)}};
    doc.result = {{"terms", dec_array(c.terms)},
                  {"valuations", dec_array(c.valuations)},
                  {"termination", to_string(c.termination)}};
    doc.table = join(c.terms) + "\n" + limit_note(c.termination == Termination::StepLimit, limit);
    doc.csv = "index,value,valuation\n";
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        doc.csv += std::to_string(i) + "," + dec(c.terms[i]) + "," +
                   (i < c.valuations.size() ? dec(c.valuations[i]) : std::string{}) + "\n";
    }
    return doc;
}

inline std::string powers_of_two(const std::vector<std::size_t>& exps) {
    std::string out;
    for (std::size_t e : exps) out += (out.empty() ? "" : " + ") + ("2^" + std::to_string(e));
    return out;
}

inline OutputDocument tail(const TailInfo& info) {
    OutputDocument doc{"tail"};
    doc.parameters = {{"value", dec(info.value)}};
    std::vector<std::size_t> tail_exps;
    for (std::size_t e = info.tail_length + 1; e-- > 0;) tail_exps.push_back(e);
    std::vector<std::size_t> all = info.head_exponents;
    all.insert(all.end(), tail_exps.begin(), tail_exps.end());
    doc.result = {{"value", dec(info.value)},
                  {"tail_length", dec(info.tail_length)},
                  {"head_exponents", dec_array(info.head_exponents)},
                  {"tail_exponents", dec_array(tail_exps)}};
    doc.table = dec(info.value) + " = " + powers_of_two(all) + "\n" + "tail = " + powers_of_two(tail_exps) +
                "\n" + "tail length = " + std::to_string(info.tail_length) + "\n";
    doc.csv = "value,tail_length,head_exponents\n" + dec(info.value) + "," + std::to_string(info.tail_length) + "," +
              join(info.head_exponents, " ") + "\n";
    return doc;
}

inline OutputDocument jumps(const OddNatural& a, const std::vector<JumpDescriptor>& ds) {
    OutputDocument doc{"jump"};
    doc.parameters = {{"value", dec(a)}};
    auto arr = nlohmann::ordered_json::array();
    doc.csv = "base,height,value\n";
    for (const auto& d : ds) {
        arr.push_back({{"base", dec(d.base)}, {"height", dec(d.height)}, {"value", dec(d.value)}});
        doc.table += dec(d.value) + " is a jump from " + dec(d.base) + " of height " + std::to_string(d.height) + "\n";
        doc.csv += dec(d.base) + "," + std::to_string(d.height) + "," + dec(d.value) + "\n";
    }
    if (ds.empty()) doc.table = dec(a) + " is not a jump\n";
    doc.result = {{"jumps", arr}};
    return doc;
}

inline OutputDocument jump_from(const OddNatural& base, std::size_t height, const OddNatural& value) {
    OutputDocument doc{"jump"};
    doc.parameters = {{"from", dec(base)}, {"height", dec(height)}};
    doc.result = {{"jumps", nlohmann::ordered_json::array(
                                {{{"base", dec(base)}, {"height", dec(height)}, {"value", dec(value)}}})}};
    doc.table = dec(value) + "\n";
    doc.csv = "base,height,value\n" + dec(base) + "," + std::to_string(height) + "," + dec(value) + "\n";
    return doc;
}

inline OutputDocument merge(const MergeReport& rep, std::size_t window) {
    OutputDocument doc{"merge"};
    doc.parameters = {{"n", dec(rep.n)}, {"window", dec(window)}};
    auto checks = nlohmann::ordered_json::array();
    doc.csv = "relation,passed\n";
    std::string lines;
    for (const auto& c : rep.checks) {
        checks.push_back({{"relation", c.relation}, {"passed", c.passed}, {"detail", c.detail}});
        doc.csv += "\"" + c.relation + "\"," + (c.passed ? "true" : "false") + "\n";
        lines += std::string(c.passed ? "[pass] " : "[FAIL] ") + c.relation +
                 (c.detail.empty() ? "" : "  (" + c.detail + ")") + "\n";
    }
    doc.result = {{"r", dec(rep.r)},
                  {"k", dec(rep.k)},
                  {"j", dec(rep.j)},
                  {"merge_kind", to_string(rep.merge_kind)},
                  {"n_chain", dec_array(rep.n_chain)},
                  {"m_chain", dec_array(rep.m_chain)},
                  {"l_chain", dec_array(rep.l_chain)},
                  {"checks", checks},
                  {"passed", rep.passed()}};
    doc.table = "N = " + dec(rep.n) + "\n" + "r = " + std::to_string(rep.r) + ", k = " + std::to_string(rep.k) +
                ", j = " + std::to_string(rep.j) + ", " + to_string(rep.merge_kind) + "\n" +
                "n: " + join(rep.n_chain) + "\n" + "m: " + join(rep.m_chain) + "\n" + "l: " + join(rep.l_chain) +
                "\n" + lines;
    return doc;
}

inline nlohmann::ordered_json cell_failures(const ArrayReport& rep, const char* (*part_name)(int)) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& f : rep.failures) {
        arr.push_back({{"part", part_name(f.part)}, {"i", dec(f.i)}, {"j", dec(f.j)}, {"detail", f.detail}});
    }
    return arr;
}

inline std::string cell_failure_lines(const ArrayReport& rep, const char* (*part_name)(int)) {
    std::string out = rep.passed() ? "verification: pass (" + std::to_string(rep.cells_checked) + " cells)\n"
                                   : "verification: FAIL (" + std::to_string(rep.failures.size()) + " failures)\n";
    for (const auto& f : rep.failures) {
        out += "  " + std::string(part_name(f.part)) + " (" + std::to_string(f.i) + "," + std::to_string(f.j) +
               "): " + f.detail + "\n";
    }
    return out;
}

inline OutputDocument network(const NetworkArray& arr, const std::optional<ArrayReport>& check) {
    OutputDocument doc{"network"};
    doc.parameters = {{"n", dec(arr.seed())}, {"rows", dec(arr.rows())}, {"cols", dec(arr.cols())}};
    TextGrid grid(TextGrid::Align::Right);
    auto rows = nlohmann::ordered_json::array();
    doc.csv = "i,j,value\n";
    for (std::size_t i = 0; i <= arr.rows(); ++i) {
        std::vector<std::string> cells;
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j <= arr.cols(); ++j) {
            if (!NetworkArray::defined(i, j)) {
                cells.emplace_back();
                continue;
            }
            cells.push_back(dec(arr.at(i, j)));
            row.push_back(dec(arr.at(i, j)));
            doc.csv += std::to_string(i) + "," + std::to_string(j) + "," + dec(arr.at(i, j)) + "\n";
        }
        rows.push_back({{"i", dec(i)}, {"first_column", dec(i)}, {"values", row}});
        grid.add_row(i == 0 ? "u_i:" : "v_{" + std::to_string(i) + ",i}:", std::move(cells));
    }
    doc.result = {{"rows", rows}};
    doc.table = grid.str();
    if (check) {
        doc.result["verification"] = {{"passed", check->passed()},
                                      {"cells_checked", dec(check->cells_checked)},
                                      {"failures", cell_failures(*check, network_part_name)}};
        doc.table += cell_failure_lines(*check, network_part_name);
    }
    return doc;
}

inline OutputDocument reverse_full(const ReverseTrace& t, std::size_t limit) {
    OutputDocument doc{"reverse"};
    doc.parameters = {{"start", dec(t.start)}, {"limit", dec(limit)}, {"odd", false}};
    doc.result = {{"terms", dec_array(t.terms)}, {"termination", "step_limit"}};
    doc.table = join(t.terms) + "\n";
    doc.csv = "index,value\n";
    for (std::size_t i = 0; i < t.terms.size(); ++i) doc.csv += std::to_string(i) + "," + dec(t.terms[i]) + "\n";
    return doc;
}

inline OutputDocument reverse_odd(const ReverseOddChain& c, std::size_t limit) {
    OutputDocument doc{"reverse"};
    doc.parameters = {{"start", dec(c.start)}, {"limit", dec(limit)}, {"odd", true}};
    doc.result = {{"terms", dec_array(c.terms)}, {"termination", to_string(c.termination)}};
    doc.table = join(c.terms) + "\n" +
                (c.termination == ReverseTermination::ReachedMultipleOf3
                     ? "converges to " + dec(c.terms.back()) + " (multiple of 3)\n"
                     : limit_note(true, limit));
    doc.csv = "index,value\n";
    for (std::size_t i = 0; i < c.terms.size(); ++i) doc.csv += std::to_string(i) + "," + dec(c.terms[i]) + "\n";
    return doc;
}

inline const char* triangle_part_name(int p) { return detail::triangle_part_name(p); }

inline OutputDocument triangle(const UnwindTriangle& t, const ArrayReport& check) {
    OutputDocument doc{"unwind"};
    doc.parameters = {{"a", dec(t.apex())}, {"trace", false}};
    TextGrid grid(TextGrid::Align::Left);
    auto rows = nlohmann::ordered_json::array();
    doc.csv = "i,j,value\n";
    for (std::size_t i = 0; i <= t.n(); ++i) {
        std::vector<std::string> cells;
        for (std::size_t j = 0; j < t.row(i).size(); ++j) {
            cells.push_back(dec(t.at(i, j)));
            doc.csv += std::to_string(i) + "," + std::to_string(j) + "," + dec(t.at(i, j)) + "\n";
        }
        rows.push_back(dec_array(t.row(i)));
        grid.add_row("v_{" + std::to_string(i) + ",j}:", std::move(cells));
    }
    doc.result = {{"n", dec(t.n())},
                  {"rows", rows},
                  {"verification",
                   {{"passed", check.passed()},
                    {"cells_checked", dec(check.cells_checked)},
                    {"failures", cell_failures(check, triangle_part_name)}}}};
    doc.table = grid.str();
    if (!check.passed()) doc.table += cell_failure_lines(check, triangle_part_name);
    return doc;
}

inline OutputDocument descent(const OddNatural& a, const AnnotatedDescent& d, std::size_t limit) {
    OutputDocument doc{"unwind"};
    doc.parameters = {{"a", dec(a)}, {"trace", true}, {"limit", dec(limit)}};
    auto lines = nlohmann::ordered_json::array();
    doc.csv = "index,value,three_two_a,three_two_b,three_two_x,four_i,four_c,four_b\n";
    for (const auto& l : d.lines) {
        std::string text = "v_{" + std::to_string(l.index) + ",0} = " + dec(l.value);
        nlohmann::ordered_json entry = {{"index", dec(l.index)}, {"value", dec(l.value)}};
        std::string csv = std::to_string(l.index) + "," + dec(l.value);
        if (l.three_two) {
            text += " = " + collatz::render(*l.three_two);
            entry["three_two"] = {{"a", dec(l.three_two->a)}, {"b", dec(l.three_two->b)}, {"x", dec(l.three_two->x)}};
            csv += "," + dec(l.three_two->a) + "," + dec(l.three_two->b) + "," + dec(l.three_two->x);
        } else {
            csv += ",,,";
        }
        if (l.four) {
            text += " = " + collatz::render(*l.four);
            entry["four"] = {{"i", dec(l.four->i)}, {"c", dec(l.four->c)}, {"b", dec(l.four->b)}};
            csv += "," + dec(l.four->i) + "," + dec(l.four->c) + "," + dec(l.four->b);
        } else {
            csv += ",,,";
        }
        lines.push_back(std::move(entry));
        doc.table += text + "\n";
        doc.csv += csv + "\n";
    }
    doc.result = {{"lines", lines}, {"termination", to_string(d.termination)}};
    if (d.termination == ReverseTermination::StepLimit) doc.table += limit_note(true, limit);
    return doc;
}

inline OutputDocument backward(const BackwardChain& chain, const BackwardStrategy& strategy,
                               const std::optional<RoundTripReport>& check, std::size_t step_limit) {
    OutputDocument doc{"backward"};
    doc.parameters = {{"anchor", dec(chain.anchor)}, {"depth", dec(chain.depth())}, {"strategy", strategy.str()}};
    auto links = nlohmann::ordered_json::array();
    doc.table = dec(chain.anchor) + "\n";
    doc.csv = "index,value,edge,height\n0," + dec(chain.anchor) + ",,\n";
    for (std::size_t k = 0; k < chain.links.size(); ++k) {
        const auto& l = chain.links[k];
        const std::string tag(1, edge_tag(l.edge));
        links.push_back({{"value", dec(l.value)}, {"edge", tag}, {"height", dec(l.height)}});
        doc.table += tag + " " + dec(l.value) + "\n";
        doc.csv += std::to_string(k + 1) + "," + dec(l.value) + "," + tag + "," + std::to_string(l.height) + "\n";
    }
    doc.result = {{"anchor", dec(chain.anchor)}, {"links", links}};
    if (check) {
        auto violations = nlohmann::ordered_json::array();
        for (const auto& v : check->edges.violations) {
            violations.push_back({{"check", v.check}, {"edge", dec(v.index)}, {"detail", v.detail}});
        }
        doc.result["round_trip"] = {{"passed", check->passed()},
                                    {"step_limit", dec(step_limit)},
                                    {"edge_violations", violations},
                                    {"passes_back_through", check->passes_back_through},
                                    {"outermost_reaches_one", check->outermost_reaches_one},
                                    {"values_reaching_one", dec(check->values_reaching_one)},
                                    {"values_hitting_limit", dec(check->values_hitting_limit)}};
        doc.table += std::string("round trip: ") + (check->passed() ? "pass" : "FAIL") + "\n";
        for (const auto& v : check->edges.violations) {
            doc.table += "  edge " + std::to_string(v.index) + " " + v.check + ": " + v.detail + "\n";
        }
        doc.table += "forward from " + dec(chain.outermost()) +
                     (check->outermost_reaches_one ? " reaches 1" : " hits the step limit") + "\n";
        doc.table += "chain values reaching 1: " + std::to_string(check->values_reaching_one) + " of " +
                     std::to_string(check->values_reaching_one + check->values_hitting_limit) + "\n";
    }
    return doc;
}

inline OutputDocument verification(const VerificationReport& rep, const SuiteOptions& opt, bool timing) {
    OutputDocument doc{"verify"};
    doc.parameters = {{"suite", rep.property_id}, {"lo", dec(rep.lo)}, {"hi", dec(rep.hi)}};
    if (rep.property_id == "network") {
        doc.parameters["rows"] = dec(opt.rows);
        doc.parameters["cols"] = dec(opt.cols);
    }
    auto failures = nlohmann::ordered_json::array();
    doc.csv = "witness,detail\n";
    for (const auto& f : rep.failures) {
        failures.push_back({{"witness", dec(f.witness)}, {"detail", f.detail}});
        doc.csv += dec(f.witness) + ",\"" + f.detail + "\"\n";
    }
    auto tallies = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.tallies) tallies[k] = std::to_string(v);
    doc.result = {{"property_id", rep.property_id},
                  {"range", {{"lo", dec(rep.lo)}, {"hi", dec(rep.hi)}, {"filter", rep.filter}}},
                  {"checked", std::to_string(rep.checked)},
                  {"failures", failures},
                  {"tallies", tallies},
                  {"complete", rep.complete},
                  {"passed", rep.passed()}};
    if (timing) {
        doc.result["elapsed_ms"] = std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(rep.elapsed).count());
    }

    doc.table = "suite: " + rep.property_id + "\n" + "range: " + dec(rep.lo) + ".." + dec(rep.hi) + "\n" +
                "filter: " + rep.filter + "\n" + "checked: " + std::to_string(rep.checked) + "\n" +
                "failures: " + std::to_string(rep.failures.size()) + "\n";
    for (const auto& [k, v] : rep.tallies) doc.table += k + ": " + std::to_string(v) + "\n";
    if (!rep.complete) doc.table += "incomplete: time budget exhausted\n";
    if (timing) {
        doc.table += "elapsed: " +
                     std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(rep.elapsed).count()) + " ms\n";
    }
    doc.table += std::string("status: ") + (rep.passed() ? "pass" : "FAIL") + "\n";
    for (const auto& f : rep.failures) doc.table += "  " + dec(f.witness) + ": " + f.detail + "\n";
    return doc;
}

}  // namespace render

/// Parses `args` (without the program name), runs the command and writes the
/// selected rendering to `out` (or to --out PATH). Diagnostics go to `err`.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Collatz dynamics toolkit: forward and reverse chains, arrays, and bulk lemma checks", "collatz"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_name = "table";
    std::string out_path;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "Write the document to PATH instead of standard output");

    std::string arg_a;
    std::optional<std::size_t> limit;

    auto* seq = app.add_subcommand("seq", "Collatz sequence up to the first 1");
    seq->add_option("A", arg_a, "Starting number")->required();
    seq->add_option("--limit", limit, "Maximum number of steps");

    auto* odd = app.add_subcommand("odd", "Odd subsequence up to the first 1");
    odd->add_option("A", arg_a, "Odd starting number")->required();
    odd->add_option("--limit", limit, "Maximum number of odd terms");

    auto* tail_cmd = app.add_subcommand("tail", "Binary tail of an odd number");
    tail_cmd->add_option("A", arg_a, "Odd number")->required();

    std::string jump_from;
    std::size_t jump_height = 0;
    auto* jump = app.add_subcommand("jump", "Decompose A as a jump, or compute the jump from P of height H");
    jump->add_option("A", arg_a, "Odd number to decompose");
    auto* from_opt = jump->add_option("--from", jump_from, "Base P");
    auto* height_opt = jump->add_option("--height", jump_height, "Height H >= 1");
    from_opt->needs(height_opt);
    height_opt->needs(from_opt);

    std::size_t window = 8;
    std::optional<std::size_t> max_steps;
    auto* merge = app.add_subcommand("merge", "Merge structure of the chains of N, 2N+1, 4N+3");
    merge->add_option("N", arg_a, "Odd number")->required();
    merge->add_option("--window", window, "Post-merge terms compared")->capture_default_str();
    merge->add_option("--max-steps", max_steps, "Search bound for the first step with valuation > 1");

    std::size_t rows = 0;
    std::size_t cols = 0;
    bool net_verify = false;
    auto* network = app.add_subcommand("network", "Diagonal array seeded by u_0 = 4n + 1");
    network->add_option("N", arg_a, "Seed n, n != 1 mod 3")->required();
    network->add_option("--rows", rows, "Rows below u")->required();
    network->add_option("--cols", cols, "Last column index")->required();
    network->add_flag("--verify", net_verify, "Check the array's properties");

    bool odd_only = false;
    auto* reverse = app.add_subcommand("reverse", "Reverse Collatz sequence");
    reverse->add_option("A", arg_a, "Starting number")->required();
    reverse->add_option("--limit", limit, "Steps (full sequence) or maximum odd steps (--odd)");
    reverse->add_flag("--odd", odd_only, "Odd subsequence, stopping at a multiple of 3");

    bool trace = false;
    auto* unwind = app.add_subcommand("unwind", "Unwind triangle of an odd A = 2 mod 3");
    unwind->add_option("A", arg_a, "Odd number")->required();
    unwind->add_flag("--trace", trace, "Annotated reverse odd descent instead of the triangle");
    unwind->add_option("--limit", limit, "Maximum descent steps for --trace");

    std::size_t depth = 0;
    std::string strategy_name = "smallest";
    bool rt_check = false;
    auto* backward = app.add_subcommand("backward", "Extend a chain backward with predecessors and jumps");
    backward->add_option("A", arg_a, "Odd anchor")->required();
    backward->add_option("--depth", depth, "Number of edges")->required();
    backward->add_option("--strategy", strategy_name, "smallest | jump:H")->capture_default_str();
    backward->add_flag("--check", rt_check, "Round-trip the chain forward");
    backward->add_option("--limit", limit, "Odd step limit for forward runs");

    std::string suite_name;
    std::string range_text;
    SuiteOptions suite_opt;
    bool timing = false;
    std::optional<std::size_t> budget_ms;
    auto* verify = app.add_subcommand("verify", "Run a property suite over a range");
    verify->add_option("SUITE", suite_name, "Suite id")->required();
    verify->add_option("--range", range_text, "LO..HI")->required();
    verify->add_option("--rows", suite_opt.rows, "Network rows")->capture_default_str();
    verify->add_option("--cols", suite_opt.cols, "Network columns")->capture_default_str();
    verify->add_option("--threads", suite_opt.threads, "Worker threads (0 = all cores)");
    verify->add_option("--time-budget-ms", budget_ms, "Stop early and report a partial result");
    verify->add_flag("--timing", timing, "Include elapsed time in the report");

    std::vector<std::string> argv_store{"collatz"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    int status = exit_ok;
    OutputDocument doc;
    try {
        if (*seq) {
            const std::size_t lim = limit.value_or(env_step_limit(default_raw_step_limit));
            doc = render::sequence(collatz_sequence(parse_positive(arg_a), lim), lim);
        } else if (*odd) {
            const std::size_t lim = limit.value_or(env_step_limit(default_odd_step_limit));
            if (lim == 0) throw domain_error("--limit must be >= 1");
            doc = render::odd_chain(odd_subsequence(parse_odd(arg_a), lim), lim);
        } else if (*tail_cmd) {
            doc = render::tail(tail_info(parse_odd(arg_a)));
        } else if (*jump) {
            if (!jump_from.empty()) {
                if (!arg_a.empty()) throw domain_error("give either A or --from/--height, not both");
                const auto base = parse_odd(jump_from);
                doc = render::jump_from(base, jump_height, jump_value(base, jump_height));
            } else {
                if (arg_a.empty()) throw domain_error("jump needs A or --from P --height H");
                const auto a = parse_odd(arg_a);
                doc = render::jumps(a, jump_decompose(a));
            }
        } else if (*merge) {
            const auto rep = analyze_merge(parse_odd(arg_a), MergeOptions{max_steps, window});
            doc = render::merge(rep, window);
            if (!rep.passed()) status = exit_failures;
        } else if (*network) {
            const auto arr = build_network(parse_natural(arg_a), rows, cols);
            std::optional<ArrayReport> check;
            if (net_verify) {
                check = verify_network(arr);
                if (!check->passed()) status = exit_failures;
            }
            doc = render::network(arr, check);
        } else if (*reverse) {
            if (odd_only) {
                const std::size_t lim = limit.value_or(default_odd_step_limit);
                doc = render::reverse_odd(reverse_odd_chain(parse_odd(arg_a), lim), lim);
            } else {
                const std::size_t lim = limit.value_or(19);
                doc = render::reverse_full(reverse_sequence(parse_positive(arg_a), lim), lim);
            }
        } else if (*unwind) {
            const auto a = parse_odd(arg_a);
            if (trace) {
                const std::size_t lim = limit.value_or(default_odd_step_limit);
                doc = render::descent(a, annotate_descent(a, lim), lim);
            } else {
                const auto t = build_triangle(a);
                const auto check = verify_triangle(t);
                doc = render::triangle(t, check);
                if (!check.passed()) status = exit_failures;
            }
        } else if (*backward) {
            const auto strategy = BackwardStrategy::parse(strategy_name);
            const auto chain = extend_backward(parse_odd(arg_a), depth, strategy);
            const std::size_t lim = limit.value_or(default_odd_step_limit);
            std::optional<RoundTripReport> check;
            if (rt_check) {
                check = round_trip_check(chain, lim);
                if (!check->passed()) status = exit_failures;
            }
            doc = render::backward(chain, strategy, check, lim);
        } else if (*verify) {
            const Suite suite = parse_suite(suite_name);
            const auto [lo, hi] = parse_range(range_text);
            if (budget_ms) suite_opt.time_budget = std::chrono::milliseconds(*budget_ms);
            const auto rep = run_suite(suite, lo, hi, suite_opt);
            doc = render::verification(rep, suite_opt, timing);
            if (!rep.passed()) status = exit_failures;
        }
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const step_limit_exceeded& e) {
        err << "step limit: " << e.what() << "\n";
        return exit_failures;
    }

    const std::string text = doc.render(parse_format(format_name));
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << out_path << " for writing\n";
            return exit_usage;
        }
        file << text;
    } else {
        out << text;
    }
    return status;
}

}  // namespace collatz::cli
