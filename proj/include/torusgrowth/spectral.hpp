#pragma once

/**
 * @file spectral.hpp
 *
 * Growth-rate extraction and Perron-dominance analysis.  The growth rate
 * is omega = 1/r0 where r0 is the unique positive root of
 * g = (C_p - 1)(C_q - 1) - 1; dominance is checked against the full root
 * set of the reciprocal polynomial g* of -g.
 *
 * Root finding runs simultaneous (Weierstrass) iteration on the exact
 * square-free factors of the input, with a posteriori inclusion radii;
 * the square-free split matters because g acquires a double root at
 * t = -1 whenever p and q are both divisible by 4.
 */

#include "torusgrowth/formulas.hpp"
#include "torusgrowth/oracles.hpp"
#include "torusgrowth/polynomial.hpp"

#include <cassert>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace torusgrowth {

/// One complex root with a certified inclusion radius.
struct RootEstimate {
    double re = 0.0;
    double im = 0.0;
    double radius = 0.0;

    double modulus() const { return std::hypot(re, im); }
};

enum class PerronVerdict { perron_dominant, equal_modulus_detected, not_applicable_2_2 };

inline std::string to_string(PerronVerdict v) {
    switch (v) {
        case PerronVerdict::perron_dominant: return "PERRON_DOMINANT";
        case PerronVerdict::equal_modulus_detected: return "EQUAL_MODULUS_DETECTED";
        case PerronVerdict::not_applicable_2_2: return "NOT_APPLICABLE_2_2";
    }
    return "UNKNOWN";
}

struct PerronReport {
    int p = 0;
    int q = 0;
    double r0 = 0.0;
    double omega = 0.0;
    int lemma_gcd = 0;
    double dominance_margin = 0.0;
    PerronVerdict verdict = PerronVerdict::perron_dominant;
};

/// gcd of the degrees carrying nonzero coefficients, constant term excluded.
inline int support_gcd(const Polynomial& a) {
    long long g = 0;
    for (int k = 1; k <= a.degree(); ++k)
        if (a.coeff(k) != 0) g = std::gcd(g, static_cast<long long>(k));
    if (g == 0) throw std::invalid_argument("polynomial has no positive-degree terms");
    return static_cast<int>(g);
}

/**
 * Bisection for the unique positive root of g, valid when g(0) < 0 and
 * g(1) > 0 (g increasing on the positive axis).  Throws std::domain_error
 * when the sign conditions fail, e.g. for (p,q) = (2,2) where g(1) = 0.
 */
inline double smallest_positive_root(const Polynomial& g, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (g.coeff(0) >= 0 || evaluate(g, Int(1)) <= 0)
        throw std::domain_error("bisection requires g(0) < 0 and g(1) > 0");
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (evaluate(g, mid) < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// omega = 1/r0; exactly 1 for (2,2), where the growth is polynomial.
inline double growth_rate(const TorusParams& params, double tol = 1e-12) {
    if (params.p == 2 && params.q == 2) return 1.0;
    return 1.0 / smallest_positive_root(denominator_g(params), tol);
}

/**
 * Square-free decomposition (Yun): returns pairwise-coprime primitive
 * square-free factors with their multiplicities; the input equals the
 * product of f^mult up to a rational constant.
 */
inline std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& a) {
    if (a.degree() < 1) throw std::invalid_argument("square-free decomposition needs degree >= 1");
    Polynomial p0 = normalize_sign(primitive_part(a));
    Polynomial d = gcd(p0, derivative(p0));
    if (d.degree() == 0) return {{std::move(p0), 1}};
    Polynomial b = divide_exact(p0, d);
    Polynomial c = divide_exact(derivative(p0), d);
    Polynomial z = c - derivative(b);
    std::vector<std::pair<Polynomial, int>> factors;
    int multiplicity = 1;
    while (b.degree() > 0) {
        Polynomial f = gcd(b, z);
        if (f.degree() > 0) factors.emplace_back(f, multiplicity);
        b = divide_exact(b, f);
        c = divide_exact(z, f);
        z = c - derivative(b);
        ++multiplicity;
    }
    return factors;
}

namespace detail {

inline constexpr double kRootRadiusBound = 1e-9;

/**
 * Weierstrass (Durand-Kerner) iteration on a square-free polynomial.
 * Certification: with all corrections W_k computed at the final points,
 * every disk D(z_k, deg * |W_k|) contains a root, and pairwise-disjoint
 * disks contain exactly one each.
 */
inline std::vector<RootEstimate> simultaneous_roots_squarefree(const Polynomial& f) {
    using Cplx = std::complex<long double>;
    const int deg = f.degree();
    const long double lead = f.leading_coefficient().convert_to<long double>();
    std::vector<Cplx> monic(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) monic[static_cast<std::size_t>(k)] = f.coeff(k).convert_to<long double>() / lead;

    auto eval = [&monic, deg](Cplx x) {
        Cplx acc = monic[static_cast<std::size_t>(deg)];
        for (int k = deg - 1; k >= 0; --k) acc = acc * x + monic[static_cast<std::size_t>(k)];
        return acc;
    };

    if (deg == 1) {
        Cplx r = -monic[0];
        double mag = static_cast<double>(std::abs(r));
        return {{static_cast<double>(r.real()), static_cast<double>(r.imag()), 1e-15 * (1.0 + mag)}};
    }

    long double bound = 0;
    for (int k = 0; k < deg; ++k) bound = std::max(bound, std::abs(monic[static_cast<std::size_t>(k)]));
    bound += 1;

    std::vector<Cplx> z(static_cast<std::size_t>(deg));
    for (int k = 0; k < deg; ++k) {
        long double angle = 2.0L * 3.141592653589793238L * k / deg + 0.5L;
        z[static_cast<std::size_t>(k)] = bound * Cplx(std::cos(angle), std::sin(angle));
    }

    std::vector<long double> radii(static_cast<std::size_t>(deg));
    for (int iter = 0; iter < 500; ++iter) {
        for (int k = 0; k < deg; ++k) {
            Cplx prod = 1;
            for (int j = 0; j < deg; ++j)
                if (j != k) prod *= z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)];
            z[static_cast<std::size_t>(k)] -= eval(z[static_cast<std::size_t>(k)]) / prod;
        }
        bool certified = true;
        for (int k = 0; k < deg && certified; ++k) {
            Cplx prod = 1;
            for (int j = 0; j < deg; ++j)
                if (j != k) prod *= z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)];
            radii[static_cast<std::size_t>(k)] = deg * std::abs(eval(z[static_cast<std::size_t>(k)])) / std::abs(prod);
            certified = radii[static_cast<std::size_t>(k)] < 0.25 * kRootRadiusBound;
        }
        for (int k = 0; k < deg && certified; ++k)
            for (int j = k + 1; j < deg && certified; ++j)
                certified = std::abs(z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]) >
                            radii[static_cast<std::size_t>(k)] + radii[static_cast<std::size_t>(j)];
        if (certified) {
            std::vector<RootEstimate> out(static_cast<std::size_t>(deg));
            for (int k = 0; k < deg; ++k)
                out[static_cast<std::size_t>(k)] = {static_cast<double>(z[static_cast<std::size_t>(k)].real()),
                                                    static_cast<double>(z[static_cast<std::size_t>(k)].imag()),
                                                    static_cast<double>(radii[static_cast<std::size_t>(k)])};
            return out;
        }
    }
    throw std::runtime_error("simultaneous root iteration failed to certify within the iteration budget");
}

}  // namespace detail

/**
 * All complex roots of a, with multiplicity, each certified to radius
 * < 1e-9.  Multiple roots are split off exactly beforehand, so the
 * iteration itself only ever sees simple roots.
 */
inline std::vector<RootEstimate> all_roots(const Polynomial& a) {
    if (a.degree() < 1) throw std::invalid_argument("root finding needs degree >= 1");
    std::vector<RootEstimate> out;
    out.reserve(static_cast<std::size_t>(a.degree()));
    for (const auto& [factor, multiplicity] : squarefree_decomposition(a)) {
        auto roots = detail::simultaneous_roots_squarefree(factor);
        for (const RootEstimate& r : roots)
            for (int copy = 0; copy < multiplicity; ++copy) out.push_back(r);
    }
    assert(static_cast<int>(out.size()) == a.degree());
    return out;
}

/**
 * Perron-dominance report for (p,q): r0, omega, the support-gcd hypothesis
 * of the smallest-root lemma, and whether omega strictly dominates the
 * moduli of all other roots of g* (margin-separated, radii accounted).
 */
inline PerronReport perron_check(const TorusParams& params, double margin = 1e-7) {
    Polynomial g = denominator_g(params);
    PerronReport report;
    report.p = params.p;
    report.q = params.q;
    report.lemma_gcd = support_gcd(g);
    if (params.p == 2 && params.q == 2) {
        report.r0 = 1.0;
        report.omega = 1.0;
        report.dominance_margin = 0.0;
        report.verdict = PerronVerdict::not_applicable_2_2;
        return report;
    }
    report.r0 = smallest_positive_root(g, 1e-12);
    report.omega = 1.0 / report.r0;

    const std::vector<RootEstimate> roots = all_roots(reciprocal(-g));
    std::size_t omega_index = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < roots.size(); ++k) {
        double dist = std::hypot(roots[k].re - report.omega, roots[k].im);
        if (dist < best) {
            best = dist;
            omega_index = k;
        }
    }
    if (best > 1e-6) throw std::runtime_error("growth rate not located among the roots of g*");

    double max_other = 0.0;
    bool equal_modulus = false;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (k == omega_index) continue;
        double mod = roots[k].modulus();
        max_other = std::max(max_other, mod);
        if (mod + roots[k].radius >= report.omega - margin) equal_modulus = true;
    }
    report.dominance_margin = report.omega - max_other;
    report.verdict = equal_modulus ? PerronVerdict::equal_modulus_detected : PerronVerdict::perron_dominant;
    return report;
}

/// a_N^(1/N): a convergence diagnostic for omega, never a certificate.
inline double empirical_rate(const SphereCounts& counts) {
    const int n = static_cast<int>(counts.counts.size()) - 1;
    if (n < 4) throw std::invalid_argument("empirical rate needs at least five sphere counts");
    return std::pow(counts.counts.back().convert_to<double>(), 1.0 / n);
}

}  // namespace torusgrowth
