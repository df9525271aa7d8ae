#pragma once

/**
 * @file canonical.hpp
 *
 * Exact element algebra for the groups
 *   <x_1, ..., x_k, z | x_1^{p_1} = ... = x_k^{p_k} = z>
 * (k = 2 is the torus link group T'_{p,q}).  An element is written
 * uniquely as z^i * u where u is an alternating word in syllables
 * x_j^e with e in [1, p_j - 1]; every power of a letter that wraps past
 * its exponent carries into the central z.  Multiplication is a pure
 * carry automaton on this form, so equality of elements is equality of
 * representations.
 */

#include "torusgrowth/formulas.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace torusgrowth {

/// Defining exponents of <x_1, ..., x_k, z | x_i^{p_i} = z>.
struct Presentation {
    std::vector<int> exponents;

    explicit Presentation(std::vector<int> exps) : exponents(std::move(exps)) {
        if (exponents.empty()) throw std::invalid_argument("presentation needs at least one letter");
        for (int p : exponents)
            if (p < 2) throw std::invalid_argument("presentation exponents must be at least 2");
    }

    Presentation(const TorusParams& params) : exponents{params.p, params.q} {}

    int letter_count() const { return static_cast<int>(exponents.size()); }
};

struct Syllable {
    std::uint8_t letter;
    int exp;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct CanonicalElement {
    long long z_exp = 0;
    std::vector<Syllable> syllables;

    friend bool operator==(const CanonicalElement&, const CanonicalElement&) = default;
};

inline CanonicalElement identity() { return {}; }

/// True when letters alternate and every exponent lies in [1, p-1].
inline bool is_canonical(const CanonicalElement& g, const Presentation& pres) {
    int last = -1;
    for (const Syllable& s : g.syllables) {
        if (s.letter >= pres.exponents.size()) return false;
        if (s.letter == last) return false;
        if (s.exp < 1 || s.exp >= pres.exponents[s.letter]) return false;
        last = s.letter;
    }
    return true;
}

namespace detail {

// z exponents stay below the word length in every reachable computation;
// anything past this is a logic error, not a big-integer use case.
inline constexpr long long kZExpGuard = 1LL << 40;

inline void check_z_range(long long z) {
    if (z > kZExpGuard || z < -kZExpGuard) throw std::overflow_error("central exponent out of guarded range");
}

}  // namespace detail

inline CanonicalElement multiply(const CanonicalElement& a, const CanonicalElement& b, const Presentation& pres) {
    CanonicalElement r;
    r.z_exp = a.z_exp + b.z_exp;
    r.syllables = a.syllables;
    r.syllables.reserve(a.syllables.size() + b.syllables.size());
    for (const Syllable& s : b.syllables) {
        if (!r.syllables.empty() && r.syllables.back().letter == s.letter) {
            const int mod = pres.exponents[s.letter];
            int sum = r.syllables.back().exp + s.exp;
            if (sum >= mod) {
                ++r.z_exp;
                sum -= mod;
            }
            if (sum == 0)
                r.syllables.pop_back();
            else
                r.syllables.back().exp = sum;
        } else {
            r.syllables.push_back(s);
        }
    }
    detail::check_z_range(r.z_exp);
    return r;
}

/// x^e inverts to z^-1 x^(p-e), so each syllable contributes one negative carry.
inline CanonicalElement inverse(const CanonicalElement& a, const Presentation& pres) {
    CanonicalElement r;
    r.z_exp = -a.z_exp - static_cast<long long>(a.syllables.size());
    detail::check_z_range(r.z_exp);
    r.syllables.reserve(a.syllables.size());
    for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it)
        r.syllables.push_back({it->letter, pres.exponents[it->letter] - it->exp});
    return r;
}

/// x_1, x_1^-1, ..., x_k, x_k^-1, z, z^-1 as canonical forms.
inline std::vector<CanonicalElement> generators(const Presentation& pres) {
    std::vector<CanonicalElement> gens;
    gens.reserve(2 * pres.exponents.size() + 2);
    for (std::uint8_t i = 0; i < pres.exponents.size(); ++i) {
        gens.push_back({0, {Syllable{i, 1}}});
        gens.push_back({-1, {Syllable{i, pres.exponents[i] - 1}}});
    }
    gens.push_back({1, {}});
    gens.push_back({-1, {}});
    return gens;
}

inline std::vector<CanonicalElement> generators(const TorusParams& params) {
    return generators(Presentation(params));
}

}  // namespace torusgrowth

template <>
struct std::hash<torusgrowth::CanonicalElement> {
    std::size_t operator()(const torusgrowth::CanonicalElement& g) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ULL;
        };
        mix(static_cast<std::uint64_t>(g.z_exp));
        for (const auto& s : g.syllables) {
            mix(s.letter);
            mix(static_cast<std::uint64_t>(s.exp));
        }
        return static_cast<std::size_t>(h);
    }
};
