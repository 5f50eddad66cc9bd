#pragma once

// Command-line surface: interval, cosets, quotient, check, scan, export.
// Exit codes: 0 success, 1 genuine property violation, 2 invalid input.

#include <coxlab/io.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace coxlab::cli {

namespace detail {

struct SystemArgs {
    std::string type;
    int rank = 0;
    std::string matrix_file;
    std::string group;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--type", type, "System family (only 'A')");
        cmd->add_option("--rank", rank, "Rank of the system");
        cmd->add_option("--matrix-file", matrix_file, "JSON system descriptor file");
        cmd->add_option("--group", group, "Shorthand like A3 for type A rank 3");
    }

    CoxeterSystem resolve() const {
        if (!matrix_file.empty()) {
            std::ifstream in(matrix_file);
            if (!in) throw std::invalid_argument("cannot open matrix file '" + matrix_file + "'");
            io::json j;
            in >> j;
            return io::system_from_json(j);
        }
        if (!group.empty()) {
            if (group.size() < 2 || (group[0] != 'A' && group[0] != 'a'))
                throw std::invalid_argument("unsupported group '" + group +
                                            "' (expected A<rank>, e.g. A3)");
            return CoxeterSystem::type_a(std::stoi(group.substr(1)));
        }
        if (!type.empty() || rank > 0) {
            if (!type.empty() && type != "A" && type != "a")
                throw std::invalid_argument("unsupported system type '" + type + "'");
            if (rank <= 0) throw std::invalid_argument("--rank must be a positive integer");
            return CoxeterSystem::type_a(rank);
        }
        throw std::invalid_argument("no system given; use --type/--rank, --group or --matrix-file");
    }
};

struct ScopeArgs {
    std::string w_literal;
    bool all = false;
    int sample = 0;
    std::uint64_t seed = 1;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--w", w_literal, "One element literal (one-line or generator word)");
        cmd->add_flag("--all", all, "Run over the whole group (default up to 120 elements)");
        cmd->add_option("--sample", sample, "Run over a seeded sample of this size");
        cmd->add_option("--seed", seed, "Seed for sampling");
    }

    // Default scope: the whole group while it is small, a seeded sample of
    // 50 beyond that; --all opts into the long-running exhaustive mode.
    std::vector<Element> resolve(const CoxeterSystem& sys) const {
        if (!w_literal.empty()) return {io::parse_element(sys, w_literal)};
        if (all) return enumerate_group(sys);
        if (sample > 0)
            return sample_elements(enumerate_group(sys), std::size_t(sample), seed);
        auto group = enumerate_group(sys);
        if (group.size() > 120) return sample_elements(std::move(group), 50, seed);
        return group;
    }
};

inline void emit(const std::string& text, const std::string& out_path, std::ostream& fallback) {
    if (out_path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write to '" + out_path + "'");
    out << text;
}

inline std::string dump(const io::json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bruhat interval and quotient combinatorics for Coxeter groups"};
    app.require_subcommand(1);

    detail::SystemArgs sys_args;
    std::string w_literal, format = "json", out_path;
    bool hasse = false;

    auto* interval_cmd = app.add_subcommand("interval", "Lower interval B(w) with its graph");
    sys_args.add_options(interval_cmd);
    interval_cmd->add_option("--w", w_literal, "Element literal")->required();
    interval_cmd->add_option("--format", format, "json or dot");
    interval_cmd->add_flag("--hasse", hasse, "Keep only covering edges in DOT output");
    interval_cmd->add_option("--out", out_path, "Output file (default stdout)");

    auto* cosets_cmd = app.add_subcommand("cosets", "Partition of B(w) into two-sided cosets");
    detail::SystemArgs cosets_sys;
    std::string cosets_w, cosets_format = "table", cosets_out;
    cosets_sys.add_options(cosets_cmd);
    cosets_cmd->add_option("--w", cosets_w, "Element literal")->required();
    cosets_cmd->add_option("--format", cosets_format, "table or json");
    cosets_cmd->add_option("--out", cosets_out, "Output file (default stdout)");

    auto* quotient_cmd = app.add_subcommand("quotient", "Quotient interval and its graph");
    detail::SystemArgs quotient_sys;
    std::string quotient_w, quotient_format = "json", quotient_out;
    quotient_sys.add_options(quotient_cmd);
    quotient_cmd->add_option("--w", quotient_w, "Element literal")->required();
    quotient_cmd->add_option("--format", quotient_format, "json or dot");
    quotient_cmd->add_option("--out", quotient_out, "Output file (default stdout)");

    auto* check_cmd = app.add_subcommand("check", "Run a theorem or appendix verifier");
    detail::SystemArgs check_sys;
    detail::ScopeArgs check_scope;
    std::string check_name, check_out;
    check_cmd->add_option("name", check_name, "theorem1, theorem2 or appendix")->required();
    check_sys.add_options(check_cmd);
    check_scope.add_options(check_cmd);
    check_cmd->add_option("--out", check_out, "Write JSON reports to this file");

    auto* scan_cmd = app.add_subcommand("scan", "Evidence scans and witness hunts");
    detail::SystemArgs scan_sys;
    detail::ScopeArgs scan_scope;
    std::string scan_name, scan_out;
    scan_cmd->add_option("name", scan_name, "deodhar, degmono, poincare or witnesses")->required();
    scan_sys.add_options(scan_cmd);
    scan_scope.add_options(scan_cmd);
    scan_cmd->add_option("--out", scan_out, "Write the JSON report to this file");

    auto* export_cmd = app.add_subcommand("export", "Write all artifacts for one element");
    detail::SystemArgs export_sys;
    std::string export_w, export_out;
    export_sys.add_options(export_cmd);
    export_cmd->add_option("--w", export_w, "Element literal")->required();
    export_cmd->add_option("--out", export_out, "Output directory")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (interval_cmd->parsed()) {
            auto sys = sys_args.resolve();
            LowerInterval interval(sys, io::parse_element(sys, w_literal));
            if (format == "json")
                detail::emit(detail::dump(io::interval_to_json(sys, interval)), out_path, out);
            else if (format == "dot")
                detail::emit(io::interval_to_dot(sys, interval, hasse), out_path, out);
            else
                throw std::invalid_argument("unknown format '" + format + "'");
            return 0;
        }

        if (cosets_cmd->parsed()) {
            auto sys = cosets_sys.resolve();
            Element w = io::parse_element(sys, cosets_w);
            auto cosets = partition(sys, w);
            if (cosets_format == "json")
                detail::emit(detail::dump(io::cosets_to_json(sys, w, cosets)), cosets_out, out);
            else if (cosets_format == "table")
                detail::emit(io::cosets_to_table(sys, w, cosets), cosets_out, out);
            else
                throw std::invalid_argument("unknown format '" + cosets_format + "'");
            return 0;
        }

        if (quotient_cmd->parsed()) {
            auto sys = quotient_sys.resolve();
            Element w = io::parse_element(sys, quotient_w);
            auto q = quotient_interval(sys, w);
            if (quotient_format == "json")
                detail::emit(detail::dump(io::quotient_to_json(sys, q, quotient_graph_check(sys, w))),
                             quotient_out, out);
            else if (quotient_format == "dot")
                detail::emit(io::quotient_to_dot(sys, q), quotient_out, out);
            else
                throw std::invalid_argument("unknown format '" + quotient_format + "'");
            return 0;
        }

        if (check_cmd->parsed()) {
            auto sys = check_sys.resolve();
            auto scope = check_scope.resolve(sys);
            std::vector<CheckReport> reports;
            if (check_name == "theorem1")
                reports = parallel_map(scope, [&](const Element& w) { return verify_theorem1(sys, w); });
            else if (check_name == "theorem2")
                reports = parallel_map(scope, [&](const Element& w) { return verify_theorem2(sys, w); });
            else if (check_name == "appendix")
                reports = {verify_appendix(sys, scope)};
            else
                throw std::invalid_argument("unknown check '" + check_name + "'");

            int failed = 0, skipped = 0;
            for (const auto& r : reports) {
                if (r.skipped) {
                    ++skipped;
                    out << "[SKIP] " << r.subject << ": " << r.skip_reason << "\n";
                } else if (r.all_pass()) {
                    out << "[PASS] " << r.subject << " (" << r.clauses.size() << " clauses)\n";
                } else {
                    ++failed;
                    for (const auto& c : r.clauses)
                        if (!c.pass)
                            out << "[FAIL] " << r.subject << " " << c.name << ": " << c.witness
                                << "\n";
                }
            }
            out << reports.size() - std::size_t(failed) - std::size_t(skipped) << " passed, "
                << failed << " failed, " << skipped << " skipped\n";
            if (!check_out.empty()) {
                io::json arr = io::json::array();
                for (const auto& r : reports) arr.push_back(io::report_to_json(r));
                detail::emit(detail::dump(arr), check_out, out);
            }
            return failed == 0 ? 0 : 1;
        }

        if (scan_cmd->parsed()) {
            auto sys = scan_sys.resolve();
            auto scope = scan_scope.resolve(sys);
            io::json result;
            bool violation = false;
            if (scan_name == "deodhar") {
                auto report = deodhar_scan(sys, scope);
                violation = !report.all_pass();
                result = io::report_to_json(report);
            } else if (scan_name == "degmono") {
                result = io::report_to_json(degree_monotone_scan(sys, scope));
            } else if (scan_name == "poincare") {
                io::json pairs = io::json::array();
                for (const auto& w : scope) {
                    auto [pw, pdown] = poincare_compare(sys, w);
                    pairs.push_back(
                        io::json{{"w", io::element_str(sys, w)},
                                 {"coefficients", io::polynomial_to_json(pw)},
                                 {"pdown", io::element_str(sys, project_down(sys, w, w))},
                                 {"pdown_coefficients", io::polynomial_to_json(pdown)}});
                }
                result = io::json{{"v", 1}, {"pairs", pairs}};
            } else if (scan_name == "witnesses") {
                result = io::report_to_json(
                    remark_witness_hunt(sys, scope, all_coset_triples(sys, scope)));
            } else {
                throw std::invalid_argument("unknown scan '" + scan_name + "'");
            }
            detail::emit(detail::dump(result), scan_out, out);
            return violation ? 1 : 0;
        }

        if (export_cmd->parsed()) {
            auto sys = export_sys.resolve();
            Element w = io::parse_element(sys, export_w);
            std::filesystem::create_directories(export_out);
            auto path = [&](const char* name) { return (std::filesystem::path(export_out) / name).string(); };
            LowerInterval interval(sys, w);
            auto cosets = partition(sys, w);
            auto q = quotient_interval(sys, w);
            auto check = quotient_graph_check(sys, w);
            detail::emit(detail::dump(io::interval_to_json(sys, interval)), path("interval.json"), out);
            detail::emit(io::interval_to_dot(sys, interval), path("interval.dot"), out);
            detail::emit(detail::dump(io::cosets_to_json(sys, w, cosets)), path("cosets.json"), out);
            detail::emit(io::cosets_to_table(sys, w, cosets), path("cosets.txt"), out);
            detail::emit(detail::dump(io::quotient_to_json(sys, q, check)), path("quotient.json"), out);
            detail::emit(io::quotient_to_dot(sys, q), path("quotient.dot"), out);
            out << "wrote 6 files to " << export_out << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace coxlab::cli
