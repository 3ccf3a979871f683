#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "qpart/catalog.hpp"
#include "qpart/det.hpp"
#include "qpart/general_mod.hpp"
#include "qpart/json_io.hpp"
#include "qpart/partition.hpp"
#include "qpart/ramanujan7.hpp"

namespace qpart {

// Command-line front end, callable in-process for tests. args excludes the
// program name. Exit codes: 0 success, 1 verification or value failure,
// 2 usage error (bad arguments, unknown names, violated preconditions).

namespace detail {

inline Int compute_p(long n, const std::string& method) {
    if (method == "euler") return p_euler(n).p(n);
    if (method == "brute") return p_bruteforce(n).p(n);
    if (method == "det-full") return det_eval_recurrence(build_eq1(n));
    if (method == "det-mod7") return det_eval_recurrence(build_mod7(n % 7, n / 7));
    const std::string prefix = "det-general:";
    if (method.rfind(prefix, 0) == 0) {
        const auto N = parse_long(method.substr(prefix.size()));
        if (!N || *N < 1)
            throw std::invalid_argument("bad modulus in method '" + method + "'");
        return det_eval_recurrence(build_general(*N, n % *N, n / *N));
    }
    throw std::invalid_argument(
        "unknown method '" + method +
        "'; expected euler, brute, det-full, det-mod7 or det-general:N");
}

inline void print_series_text(std::ostream& out, const TruncatedSeries<Int>& s) {
    for (long i = 0; i <= s.order(); ++i) {
        if (i > 0) out << ' ';
        out << to_decimal(s.coeffs()[i]);
    }
    out << '\n';
}

inline nlohmann::json report_to_json(long order, const VerificationReport& rep) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : rep.entries) {
        nlohmann::json je = {{"name", e.name},
                             {"order", e.order},
                             {"status", e.pass ? "pass" : "fail"}};
        if (e.first_mismatch) je["first_mismatch"] = *e.first_mismatch;
        entries.push_back(std::move(je));
    }
    return {{"order", order},
            {"overall", rep.overall() ? "pass" : "fail"},
            {"entries", std::move(entries)}};
}

inline void print_report_text(std::ostream& out, const VerificationReport& rep) {
    std::size_t width = 4;
    for (const auto& e : rep.entries) width = std::max(width, e.name.size());
    for (const auto& e : rep.entries) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << e.name
            << "order " << std::setw(6) << e.order << (e.pass ? "pass" : "fail");
        if (e.first_mismatch) out << "  first mismatch at " << *e.first_mismatch;
        out << '\n';
    }
    out << "overall: " << (rep.overall() ? "pass" : "fail") << '\n';
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"exact determinant formulas for the partition function p(n)"};
    app.name("qpart");
    app.require_subcommand(1);

    long p_n = 0;
    std::string p_method = "euler";
    bool p_json = false;
    auto* cmd_p = app.add_subcommand("p", "compute p(n) by the chosen method");
    cmd_p->add_option("n", p_n, "index n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_p->add_option("--method", p_method,
                      "euler | brute | det-full | det-mod7 | det-general:N");
    cmd_p->add_flag("--json", p_json, "machine-readable output");

    std::string s_name;
    long s_order = 0;
    bool s_json = false;
    auto* cmd_series =
        app.add_subcommand("series", "print a named series' coefficients 0..order");
    cmd_series->add_option("name", s_name, "catalog name, e.g. J1, Z7_0, D:11")
        ->required();
    cmd_series->add_option("--order", s_order, "truncation order")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_series->add_flag("--json", s_json, "machine-readable output");

    long v_order = 50;
    std::vector<std::string> v_only;
    bool v_json = false;
    auto* cmd_verify =
        app.add_subcommand("verify", "check the identity and cross-method suites");
    cmd_verify->add_option("--order", v_order, "truncation order (default 50)")
        ->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--only", v_only, "comma-separated check names")
        ->delimiter(',');
    cmd_verify->add_flag("--json", v_json, "machine-readable output");

    long b_nmax = 0;
    std::vector<std::string> b_methods = {"euler", "det-full"};
    bool b_json = false;
    auto* cmd_bench =
        app.add_subcommand("bench", "time p(nmax) across methods, values must agree");
    cmd_bench->add_option("--nmax", b_nmax, "index to compute")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_bench->add_option("--methods", b_methods, "comma-separated method list")
        ->delimiter(',');
    cmd_bench->add_flag("--json", b_json, "machine-readable output");

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.emplace_back("qpart");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(storage.size());
    for (const auto& s : storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (cmd_p->parsed()) {
            const Int v = detail::compute_p(p_n, p_method);
            if (p_json)
                out << nlohmann::json{{"n", p_n},
                                      {"method", p_method},
                                      {"value", to_decimal(v)}}
                           .dump()
                    << '\n';
            else
                out << to_decimal(v) << '\n';
            return 0;
        }

        if (cmd_series->parsed()) {
            const auto s = catalog_series(s_name, s_order);
            if (s_json)
                out << series_to_json(s).dump() << '\n';
            else
                detail::print_series_text(out, s);
            return 0;
        }

        if (cmd_verify->parsed()) {
            const auto known = verification_names();
            for (const auto& name : v_only)
                if (std::find(known.begin(), known.end(), name) == known.end()) {
                    std::string msg = "unknown check '" + name + "'; available:";
                    for (const auto& k : known) msg += " " + k;
                    throw std::invalid_argument(msg);
                }
            const auto rep = run_verification(v_order, v_only);
            if (v_json)
                out << detail::report_to_json(v_order, rep).dump() << '\n';
            else
                detail::print_report_text(out, rep);
            return rep.overall() ? 0 : 1;
        }

        if (cmd_bench->parsed()) {
            if (b_nmax > oracle_cap())
                throw std::invalid_argument(
                    "bench: nmax exceeds oracle cap " + std::to_string(oracle_cap()) +
                    " (set QPART_ORACLE_CAP to raise)");
            struct Row {
                std::string method;
                Int value;
                double ms;
            };
            std::vector<Row> rows;
            for (const auto& m : b_methods) {
                const auto t0 = std::chrono::steady_clock::now();
                Int v = detail::compute_p(b_nmax, m);
                const auto t1 = std::chrono::steady_clock::now();
                const double ms =
                    std::chrono::duration<double, std::milli>(t1 - t0).count();
                rows.push_back({m, std::move(v), ms});
            }
            bool agree = true;
            for (const auto& r : rows)
                if (r.value != rows.front().value) agree = false;
            if (b_json) {
                nlohmann::json jrows = nlohmann::json::array();
                for (const auto& r : rows)
                    jrows.push_back({{"method", r.method},
                                     {"value", to_decimal(r.value)},
                                     {"ms", r.ms}});
                out << nlohmann::json{{"nmax", b_nmax},
                                      {"agree", agree},
                                      {"rows", std::move(jrows)}}
                           .dump()
                    << '\n';
            } else {
                std::size_t width = 6;
                for (const auto& r : rows) width = std::max(width, r.method.size());
                for (const auto& r : rows)
                    out << std::left << std::setw(static_cast<int>(width) + 2)
                        << r.method << to_decimal(r.value) << "  "
                        << std::fixed << std::setprecision(3) << r.ms << " ms\n";
                if (!agree) out << "values disagree\n";
            }
            return agree ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    err << "error: no subcommand\n";
    return 2;
}

}  // namespace qpart
