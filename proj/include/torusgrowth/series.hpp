#pragma once

/**
 * @file series.hpp
 *
 * Power-series prefix extraction for rational functions, done in exact
 * integer arithmetic via the linear recurrence read off the denominator.
 */

#include "torusgrowth/polynomial.hpp"
#include "torusgrowth/rational_function.hpp"

#include <stdexcept>
#include <vector>

namespace torusgrowth {

/**
 * Taylor coefficients a_0 ... a_N of f at t = 0.
 *
 * Uses a_n = (p_n - sum_{k>=1} q_k a_{n-k}) / q_0 with exact integers.
 * Throws std::domain_error when the denominator vanishes at 0 or when a
 * coefficient fails to be an integer.
 */
inline std::vector<Int> series_prefix(const RationalFunction& f, int terms_through) {
    if (terms_through < 0) throw std::invalid_argument("series prefix length must be non-negative");
    const Polynomial& p = f.num();
    const Polynomial& q = f.den();
    const Int q0 = q.coeff(0);
    if (q0 == 0) throw std::domain_error("denominator vanishes at t = 0");
    std::vector<Int> a(static_cast<std::size_t>(terms_through) + 1);
    for (int n = 0; n <= terms_through; ++n) {
        Int acc = p.coeff(n);
        for (int k = 1; k <= std::min(n, q.degree()); ++k) acc -= q.coeff(k) * a[static_cast<std::size_t>(n - k)];
        if (acc % q0 != 0) throw std::domain_error("series coefficient is not an integer");
        a[static_cast<std::size_t>(n)] = acc / q0;
    }
    return a;
}

}  // namespace torusgrowth
