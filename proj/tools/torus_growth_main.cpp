/**
 * @file torus_growth_main.cpp
 *
 * Command-line front door: growth series, growth rates, Perron reports,
 * full route verification, parameter-grid scans, and the generalized
 * all-odd amalgam.  Exit codes: 0 success, 1 verification mismatch or
 * computational failure, 2 usage error.
 */

#include "torusgrowth/formulas.hpp"
#include "torusgrowth/grammar.hpp"
#include "torusgrowth/json_io.hpp"
#include "torusgrowth/oracles.hpp"
#include "torusgrowth/series.hpp"
#include "torusgrowth/spectral.hpp"
#include "torusgrowth/verification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace torusgrowth;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

std::string join_counts(const std::vector<Int>& counts) {
    std::string line;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (k > 0) line += " ";
        line += counts[k].str();
    }
    return line;
}

int run_series(int p, int q, int terms, const std::string& oracle, const std::string& format,
               const std::string& out_path) {
    TorusParams params(p, q);
    RationalFunction growth = main_growth_function(params);
    std::vector<Int> series = series_prefix(growth, terms);

    std::optional<SphereCounts> bfs;
    std::optional<SphereCounts> grammar;
    if (oracle == "bfs" || oracle == "both") bfs = sphere_counts_bfs(params, terms);
    if (oracle == "grammar" || oracle == "both") grammar = sphere_counts_grammar(params, terms);
    const bool match = (!bfs || bfs->counts == series) && (!grammar || grammar->counts == series);

    std::string text;
    if (format == "csv") {
        text = "n,a_n\n";
        for (std::size_t n = 0; n < series.size(); ++n)
            text += std::to_string(n) + "," + series[n].str() + "\n";
    } else if (format == "json") {
        text = "{\"p\":" + std::to_string(p) + ",\"q\":" + std::to_string(q) +
               ",\"terms\":" + std::to_string(terms) + ",\"num\":" + to_json(growth.num()) +
               ",\"den\":" + to_json(growth.den()) + ",\"series\":" + to_json(series);
        if (bfs) text += ",\"bfs\":" + to_json(bfs->counts);
        if (grammar) text += ",\"grammar\":" + to_json(grammar->counts);
        if (bfs || grammar) text += std::string(",\"match\":") + (match ? "true" : "false");
        text += "}\n";
    } else {
        text = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " terms=" + std::to_string(terms) + "\n";
        text += "A(t) = " + to_pretty_string(growth) + "\n";
        text += "num = " + to_json(growth.num()) + "\n";
        text += "den = " + to_json(growth.den()) + "\n";
        text += "a_n = " + join_counts(series) + "\n";
        if (bfs) text += "bfs = " + join_counts(bfs->counts) + "\n";
        if (grammar) text += "grammar = " + join_counts(grammar->counts) + "\n";
        if (bfs || grammar) text += std::string("oracle match: ") + (match ? "yes" : "NO") + "\n";
    }
    emit(text, out_path);
    return match ? 0 : 1;
}

int run_rate(int p, int q, double tol, const std::string& format, const std::string& out_path) {
    TorusParams params(p, q);
    const double omega = growth_rate(params, tol);
    const double r0 = (p == 2 && q == 2) ? 1.0 : smallest_positive_root(denominator_g(params), tol);
    const int lemma = support_gcd(denominator_g(params));

    std::string text;
    if (format == "json") {
        text = "{\"p\":" + std::to_string(p) + ",\"q\":" + std::to_string(q) + ",\"r0\":" + format_double(r0) +
               ",\"omega\":" + format_double(omega) + ",\"lemma_gcd\":" + std::to_string(lemma) + "}\n";
    } else {
        text = "p=" + std::to_string(p) + " q=" + std::to_string(q) + "\n";
        text += "r0 = " + format_double(r0) + "\n";
        text += "omega = " + format_double(omega) + "\n";
        text += "lemma_gcd = " + std::to_string(lemma) + "\n";
    }
    emit(text, out_path);
    return 0;
}

std::string perron_text(const PerronReport& r) {
    std::string text = "p=" + std::to_string(r.p) + " q=" + std::to_string(r.q) + "\n";
    text += "r0 = " + format_double(r.r0) + "\n";
    text += "omega = " + format_double(r.omega) + "\n";
    text += "lemma_gcd = " + std::to_string(r.lemma_gcd) + "\n";
    text += "dominance_margin = " + format_double(r.dominance_margin) + "\n";
    text += "verdict = " + to_string(r.verdict) + "\n";
    return text;
}

int run_perron(int p, int q, double margin, const std::string& format, const std::string& out_path) {
    PerronReport report = perron_check(TorusParams(p, q), margin);
    emit(format == "json" ? to_json(report) + "\n" : perron_text(report), out_path);
    return 0;
}

int run_perron_scan(int max_pq, double margin, const std::string& format, const std::string& out_path) {
    std::vector<PerronReport> reports;
    for (int p = 2; p <= max_pq; ++p)
        for (int q = p; q <= max_pq; ++q) reports.push_back(perron_check(TorusParams(p, q), margin));

    std::string text;
    if (format == "text") {
        for (const PerronReport& r : reports)
            text += "p=" + std::to_string(r.p) + " q=" + std::to_string(r.q) +
                    " omega=" + format_double(r.omega) + " lemma_gcd=" + std::to_string(r.lemma_gcd) +
                    " margin=" + format_double(r.dominance_margin) + " " + to_string(r.verdict) + "\n";
    } else {
        text = to_json(std::span<const PerronReport>(reports)) + "\n";
    }
    emit(text, out_path);
    return 0;
}

int run_verify(int p, int q, int terms, const std::string& format, const std::string& out_path) {
    VerificationRecord record = verify_routes(TorusParams(p, q), terms);

    std::string text;
    if (format == "json") {
        text = to_json(record) + "\n";
    } else {
        text = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " terms=" + std::to_string(terms) + "\n";
        text += "routes: ";
        for (std::size_t k = 0; k < record.routes_compared.size(); ++k)
            text += (k > 0 ? ", " : "") + record.routes_compared[k];
        text += "\n";
        text += std::string("status: ") + (record.ok ? "OK" : "MISMATCH") + "\n";
        if (record.first_mismatch_index)
            text += "first mismatch at n = " + std::to_string(*record.first_mismatch_index) + "\n";
    }
    emit(text, out_path);
    return record.ok ? 0 : 1;
}

int run_general(const std::vector<int>& exponents, int terms, const std::string& format,
                const std::string& out_path) {
    RationalFunction growth = growth_generalized_odd(exponents);
    std::vector<Int> series = series_prefix(growth, terms);

    std::string text;
    if (format == "json") {
        text = "{\"exponents\":[";
        for (std::size_t k = 0; k < exponents.size(); ++k)
            text += (k > 0 ? "," : "") + std::to_string(exponents[k]);
        text += "],\"num\":" + to_json(growth.num()) + ",\"den\":" + to_json(growth.den()) +
                ",\"series\":" + to_json(series) + "}\n";
    } else {
        text = "exponents = ";
        for (std::size_t k = 0; k < exponents.size(); ++k)
            text += (k > 0 ? "," : "") + std::to_string(exponents[k]);
        text += "\n";
        text += "A(t) = " + to_pretty_string(growth) + "\n";
        text += "num = " + to_json(growth.num()) + "\n";
        text += "den = " + to_json(growth.den()) + "\n";
        text += "a_n = " + join_counts(series) + "\n";
    }
    emit(text, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact growth functions of torus link groups <x, y, z | x^p = y^q = z>"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", out_path, "Write output to a file instead of stdout");

    int p = 2, q = 2, terms = 10, max_pq = 6;
    double tol = 1e-12, margin = 1e-7;
    std::string oracle = "none";
    std::vector<int> exponent_list;

    CLI::App* series_cmd = app.add_subcommand("series", "Growth function and series coefficients");
    series_cmd->fallthrough();
    series_cmd->add_option("--p", p, "First exponent")->required();
    series_cmd->add_option("--q", q, "Second exponent")->required();
    series_cmd->add_option("--terms", terms, "Highest coefficient index")->check(CLI::NonNegativeNumber);
    series_cmd->add_option("--oracle", oracle, "Cross-check against an enumeration oracle")
        ->check(CLI::IsMember({"none", "bfs", "grammar", "both"}));

    CLI::App* rate_cmd = app.add_subcommand("rate", "Growth rate omega and the lemma gcd");
    rate_cmd->fallthrough();
    rate_cmd->add_option("--p", p)->required();
    rate_cmd->add_option("--q", q)->required();
    rate_cmd->add_option("--tol", tol, "Bisection tolerance")->check(CLI::PositiveNumber);

    CLI::App* perron_cmd = app.add_subcommand("perron", "Perron-dominance report for one pair");
    perron_cmd->fallthrough();
    perron_cmd->add_option("--p", p)->required();
    perron_cmd->add_option("--q", q)->required();
    perron_cmd->add_option("--margin", margin, "Modulus separation margin")->check(CLI::PositiveNumber);

    CLI::App* scan_cmd = app.add_subcommand("perron-scan", "Perron reports over 2 <= p <= q <= max");
    scan_cmd->fallthrough();
    scan_cmd->add_option("--max", max_pq, "Largest exponent")->required()->check(CLI::Range(2, 1000));
    scan_cmd->add_option("--margin", margin)->check(CLI::PositiveNumber);

    CLI::App* verify_cmd = app.add_subcommand("verify", "Compare every applicable route");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--p", p)->required();
    verify_cmd->add_option("--q", q)->required();
    verify_cmd->add_option("--terms", terms)->check(CLI::NonNegativeNumber);

    CLI::App* general_cmd = app.add_subcommand("general", "Iterated amalgam for odd exponents");
    general_cmd->fallthrough();
    general_cmd->add_option("--list", exponent_list, "Comma-separated odd exponents")
        ->required()
        ->delimiter(',');
    general_cmd->add_option("--terms", terms)->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (format == "csv" && !series_cmd->parsed())
            throw std::invalid_argument("csv format is only available for the series command");
        if (series_cmd->parsed()) return run_series(p, q, terms, oracle, format, out_path);
        if (rate_cmd->parsed()) return run_rate(p, q, tol, format, out_path);
        if (perron_cmd->parsed()) return run_perron(p, q, margin, format, out_path);
        if (scan_cmd->parsed()) return run_perron_scan(max_pq, margin, format, out_path);
        if (verify_cmd->parsed()) return run_verify(p, q, terms, format, out_path);
        if (general_cmd->parsed()) return run_general(exponent_list, terms, format, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
