#pragma once

/**
 * @file formulas.hpp
 *
 * The growth function of the torus link group presentation
 * T'_{p,q} = <x, y, z | x^p = y^q = z>, assembled by three independent
 * routes: the unified closed formula, parity-case component sums, and
 * (for odd exponents) the amalgam length-additivity combination.
 */

#include "torusgrowth/polynomial.hpp"
#include "torusgrowth/rational_function.hpp"

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace torusgrowth {

struct TorusParams {
    int p;
    int q;

    TorusParams(int p_in, int q_in) : p(p_in), q(q_in) {
        if (p < 2 || q < 2) throw std::invalid_argument("torus link exponents must both be at least 2");
    }
};

/// Growth polynomial C_n of the cyclic group of order n (n >= 2).
inline Polynomial cyclic_growth_poly(int n) {
    if (n < 2) throw std::invalid_argument("cyclic group order must be at least 2");
    int h = n / 2;
    std::vector<Int> c(static_cast<std::size_t>(h) + 1, 2);
    c[0] = 1;
    if (n % 2 == 0) c[static_cast<std::size_t>(h)] = 1;
    return Polynomial(std::move(c));
}

/// Growth function (1+t)/(1-t) of the infinite cyclic group.
inline RationalFunction infinite_cyclic_growth() { return {Polynomial{1, 1}, Polynomial{1, -1}}; }

/// m_r = t^(r/2) for even r, zero for odd r.
inline Polynomial half_power(int r) {
    if (r < 2) throw std::invalid_argument("exponent must be at least 2");
    if (r % 2 != 0) return {};
    return Polynomial::monomial(1, r / 2);
}

/// g = (C_p - 1)(C_q - 1) - 1; its positive root is the reciprocal growth rate.
inline Polynomial denominator_g(const TorusParams& params) {
    Polynomial one{1};
    return (cyclic_growth_poly(params.p) - one) * (cyclic_growth_poly(params.q) - one) - one;
}

/// The unified closed formula for the growth function of T'_{p,q}.
inline RationalFunction main_growth_function(const TorusParams& params) {
    Polynomial cp = cyclic_growth_poly(params.p);
    Polynomial cq = cyclic_growth_poly(params.q);
    Polynomial k = cp + cq - cp * cq;
    RationalFunction first = infinite_cyclic_growth() * RationalFunction(cp * cq, k);
    RationalFunction second(half_power(params.q) * cp * cp + half_power(params.p) * cq * cq, k * k);
    return first + second;
}

/**
 * Combination rule for an amalgam G = H *_L K with admissible transversals:
 * 1/A = 1/B + 1/C - 1/D for the growth functions of G, H, K, L.
 */
inline RationalFunction fpa_combine(const RationalFunction& b, const RationalFunction& c,
                                    const RationalFunction& d) {
    if (b.is_zero() || c.is_zero() || d.is_zero())
        throw std::invalid_argument("amalgam combination requires nonzero growth functions");
    RationalFunction denom = c * d + b * d - b * c;
    if (denom.is_zero()) throw std::domain_error("amalgam combination has zero denominator");
    return b * c * d / denom;
}

/// Amalgam route for odd p and q: B = C_inf*C_p, C = C_inf*C_q, D = C_inf.
inline RationalFunction growth_odd_odd(const TorusParams& params) {
    if (params.p % 2 == 0 || params.q % 2 == 0)
        throw std::invalid_argument("amalgam route requires both exponents odd");
    RationalFunction cinf = infinite_cyclic_growth();
    return fpa_combine(cinf * RationalFunction(cyclic_growth_poly(params.p)),
                       cinf * RationalFunction(cyclic_growth_poly(params.q)), cinf);
}

/**
 * D_p = 2t + ... + 2t^(n-1) and E_p = t^n for even p = 2n.
 * D_p + E_p = C_p - 1; D_2 degenerates to zero.
 */
inline std::pair<Polynomial, Polynomial> de_polys(int p) {
    if (p < 2 || p % 2 != 0) throw std::invalid_argument("D/E split requires an even exponent");
    int n = p / 2;
    std::vector<Int> d(static_cast<std::size_t>(n), 2);
    d[0] = 0;
    return {Polynomial(std::move(d)), Polynomial::monomial(1, n)};
}

namespace detail {

inline Int binomial(int n, int k) {
    Int r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
    return r;
}

}  // namespace detail

/// F^(r) as the term-by-term sum  sum_k (k+1) C(r,k) D_p^(r-k) E_p^k.
inline Polynomial f_direct(int p, int r) {
    if (r < 0) throw std::invalid_argument("F exponent must be non-negative");
    auto [d, e] = de_polys(p);
    Polynomial sum;
    for (int k = 0; k <= r; ++k) {
        Polynomial term = Polynomial(Int(k + 1) * detail::binomial(r, k)) *
                          pow(d, static_cast<unsigned>(r - k)) * pow(e, static_cast<unsigned>(k));
        sum += term;
    }
    return sum;
}

/// F^(r) in closed form: (C_p - 1)^r + r E_p (C_p - 1)^(r-1); F^(0) = 1.
inline Polynomial f_closed(int p, int r) {
    if (r < 0) throw std::invalid_argument("F exponent must be non-negative");
    Polynomial e = de_polys(p).second;
    Polynomial base = cyclic_growth_poly(p) - Polynomial{1};
    if (r == 0) return Polynomial{1};
    return pow(base, static_cast<unsigned>(r)) +
           Polynomial(Int(r)) * e * pow(base, static_cast<unsigned>(r - 1));
}

/// The four word-class growth functions for even p, odd q; their sum is A.
struct EvenOddComponents {
    RationalFunction a1;
    RationalFunction a2;
    RationalFunction a3;
    RationalFunction a4;

    RationalFunction total() const { return a1 + a2 + a3 + a4; }
};

inline EvenOddComponents components_even_odd(const TorusParams& params) {
    if (params.p % 2 != 0 || params.q % 2 != 1)
        throw std::invalid_argument("component route requires p even and q odd");
    Polynomial cp = cyclic_growth_poly(params.p);
    Polynomial cq = cyclic_growth_poly(params.q);
    Polynomial one{1};
    Polynomial w = one - (cp - one) * (cq - one);  // 1 - (C_p-1)(C_q-1)
    Polynomial e = de_polys(params.p).second;

    EvenOddComponents comps;
    comps.a1 = RationalFunction(Polynomial{0, 1}, Polynomial{1, -1}) * RationalFunction(cp * cq, w);
    comps.a2 = comps.a1;
    comps.a3 = RationalFunction((cp - one) * cq, w) + RationalFunction(e * cq, w * w);
    comps.a4 = RationalFunction(cq, w) + RationalFunction(e * cq * (cq - one), w * w);
    return comps;
}

/// The five word-class growth functions for even p and q; A = a1+a2+aa+ab-ag.
struct EvenEvenComponents {
    RationalFunction a1;
    RationalFunction a2;
    RationalFunction a_alpha;
    RationalFunction a_beta;
    RationalFunction a_gamma;

    RationalFunction total() const { return a1 + a2 + a_alpha + a_beta - a_gamma; }
};

inline EvenEvenComponents components_even_even(const TorusParams& params) {
    if (params.p % 2 != 0 || params.q % 2 != 0)
        throw std::invalid_argument("component route requires both exponents even");
    Polynomial cp = cyclic_growth_poly(params.p);
    Polynomial cq = cyclic_growth_poly(params.q);
    Polynomial one{1};
    Polynomial w = one - (cp - one) * (cq - one);
    Polynomial ep = de_polys(params.p).second;
    Polynomial eq = de_polys(params.q).second;

    EvenEvenComponents comps;
    comps.a1 = RationalFunction(Polynomial{0, 1}, Polynomial{1, -1}) * RationalFunction(cp * cq, w);
    comps.a2 = comps.a1;
    comps.a_alpha = RationalFunction(cp * cq, w) + RationalFunction(ep * cq * cq, w * w);
    comps.a_beta = RationalFunction(cp * cq, w) + RationalFunction(eq * cp * cp, w * w);
    comps.a_gamma = RationalFunction(cp * cq, w);
    return comps;
}

/**
 * Growth function of <x_1, ..., x_r, z | x_1^{p_1} = ... = x_r^{p_r} = z>
 * for odd exponents, by iterating the amalgam combination one factor at
 * a time.  A single factor gives C_inf * C_{p_1}.
 */
inline RationalFunction growth_generalized_odd(std::span<const int> exponents) {
    if (exponents.empty()) throw std::invalid_argument("at least one exponent is required");
    for (int p : exponents) {
        if (p < 3 || p % 2 == 0) throw std::invalid_argument("generalized growth requires odd exponents >= 3");
    }
    RationalFunction cinf = infinite_cyclic_growth();
    RationalFunction acc = cinf * RationalFunction(cyclic_growth_poly(exponents[0]));
    for (std::size_t i = 1; i < exponents.size(); ++i)
        acc = fpa_combine(acc, cinf * RationalFunction(cyclic_growth_poly(exponents[i])), cinf);
    return acc;
}

}  // namespace torusgrowth
