#pragma once

/**
 * @file verification.hpp
 *
 * Cross-checks every applicable computation route for the sphere counts
 * of T'_{p,q}: the closed formula, the parity-case component assembly,
 * the odd-odd amalgam combination, and both enumeration oracles.
 */

#include "torusgrowth/formulas.hpp"
#include "torusgrowth/grammar.hpp"
#include "torusgrowth/oracles.hpp"
#include "torusgrowth/series.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torusgrowth {

struct VerificationRecord {
    int p = 0;
    int q = 0;
    int terms_checked = 0;
    std::vector<std::string> routes_compared;
    bool ok = true;
    std::optional<int> first_mismatch_index;
};

/// Runs all routes to depth `terms` and compares the series entrywise.
inline VerificationRecord verify_routes(const TorusParams& params, int terms) {
    if (terms < 0) throw std::invalid_argument("number of terms must be non-negative");
    VerificationRecord record;
    record.p = params.p;
    record.q = params.q;
    record.terms_checked = terms;

    std::vector<std::vector<Int>> series_by_route;
    auto add_route = [&](std::string name, std::vector<Int> series) {
        record.routes_compared.push_back(std::move(name));
        series_by_route.push_back(std::move(series));
    };

    add_route("formula", series_prefix(main_growth_function(params), terms));
    const bool p_odd = params.p % 2 == 1;
    const bool q_odd = params.q % 2 == 1;
    if (p_odd && q_odd) {
        add_route("amalgam", series_prefix(growth_odd_odd(params), terms));
    } else if (p_odd != q_odd) {
        TorusParams oriented = p_odd ? TorusParams(params.q, params.p) : params;
        add_route("components", series_prefix(components_even_odd(oriented).total(), terms));
    } else {
        add_route("components", series_prefix(components_even_even(params).total(), terms));
    }
    add_route("bfs", sphere_counts_bfs(params, terms).counts);
    add_route("grammar", sphere_counts_grammar(params, terms).counts);

    for (int n = 0; n <= terms && !record.first_mismatch_index; ++n) {
        for (const auto& series : series_by_route) {
            if (series[static_cast<std::size_t>(n)] != series_by_route.front()[static_cast<std::size_t>(n)]) {
                record.first_mismatch_index = n;
                record.ok = false;
                break;
            }
        }
    }
    return record;
}

}  // namespace torusgrowth
