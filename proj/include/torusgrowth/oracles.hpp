#pragma once

/**
 * @file oracles.hpp
 *
 * Two independent sphere-counting oracles for T'_{p,q} (and its
 * generalizations): breadth-first layering of the Cayley graph on
 * canonical forms, and breadth-first layering of the quotient
 * Z_p * Z_q obtained by killing z.
 */

#include "torusgrowth/canonical.hpp"
#include "torusgrowth/formulas.hpp"
#include "torusgrowth/polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace torusgrowth {

/// Sphere sizes a_0 ... a_N of a word metric, exact.
struct SphereCounts {
    int p = 0;
    int q = 0;
    std::vector<Int> counts;

    friend bool operator==(const SphereCounts&, const SphereCounts&) = default;
};

namespace detail {

// Visited-set key codec.  The compact form packs a syllable into one byte
// (letter high nibble, exponent low nibble) and fits typical searches into
// SSO-sized strings; the wide form covers everything else.
struct KeyCodec {
    bool compact;

    static KeyCodec choose(const Presentation& pres, int depth) {
        bool ok = pres.letter_count() <= 15 && depth <= 126;
        for (int p : pres.exponents) ok = ok && p <= 16;
        return {ok};
    }

    std::string encode(const CanonicalElement& g) const {
        std::string key;
        if (compact) {
            key.reserve(1 + g.syllables.size());
            key.push_back(static_cast<char>(static_cast<unsigned char>(g.z_exp + 127)));
            for (const Syllable& s : g.syllables)
                key.push_back(static_cast<char>((s.letter << 4) | static_cast<unsigned>(s.exp)));
        } else {
            key.reserve(2 + 3 * g.syllables.size());
            auto z = static_cast<std::uint16_t>(g.z_exp + 32767);
            key.push_back(static_cast<char>(z & 0xff));
            key.push_back(static_cast<char>(z >> 8));
            for (const Syllable& s : g.syllables) {
                key.push_back(static_cast<char>(s.letter));
                key.push_back(static_cast<char>(s.exp & 0xff));
                key.push_back(static_cast<char>(s.exp >> 8));
            }
        }
        return key;
    }
};

inline constexpr std::size_t kDefaultElementLimit = 64'000'000;

}  // namespace detail

/**
 * Sphere sizes of <x_1,...,x_k,z | x_i^{p_i} = z> w.r.t. the generators
 * x_i^{+-1}, z^{+-1}, by breadth-first search deduplicated on canonical
 * forms.  Throws std::runtime_error once the ball exceeds element_limit
 * rather than ever returning a wrong count.
 */
inline std::vector<Int> cayley_sphere_sizes(const Presentation& pres, int depth,
                                            std::size_t element_limit = detail::kDefaultElementLimit) {
    if (depth < 0) throw std::invalid_argument("sphere depth must be non-negative");
    if (!detail::KeyCodec::choose(pres, depth).compact && depth > 32000)
        throw std::invalid_argument("sphere depth out of supported range");
    const detail::KeyCodec codec = detail::KeyCodec::choose(pres, depth);
    const auto gens = generators(pres);

    std::unordered_set<std::string> visited;
    std::vector<CanonicalElement> frontier{identity()};
    visited.insert(codec.encode(frontier.front()));

    std::vector<Int> counts;
    counts.reserve(static_cast<std::size_t>(depth) + 1);
    counts.emplace_back(1);
    for (int n = 1; n <= depth; ++n) {
        std::vector<CanonicalElement> next;
        for (const CanonicalElement& g : frontier) {
            for (const CanonicalElement& s : gens) {
                CanonicalElement h = multiply(g, s, pres);
                if (visited.insert(codec.encode(h)).second) {
                    if (visited.size() > element_limit)
                        throw std::runtime_error("Cayley ball exceeded the element limit");
                    next.push_back(std::move(h));
                }
            }
        }
        counts.emplace_back(next.size());
        frontier = std::move(next);
    }
    return counts;
}

/// Breadth-first sphere counts of T'_{p,q} on canonical forms.
inline SphereCounts sphere_counts_bfs(const TorusParams& params, int depth,
                                      std::size_t element_limit = detail::kDefaultElementLimit) {
    return {params.p, params.q, cayley_sphere_sizes(Presentation(params), depth, element_limit)};
}

/**
 * Sphere sizes of the quotient Z_p * Z_q of T'_{p,q} (z killed), w.r.t.
 * the images of the six generators.  The images of z are trivial, so the
 * search moves by the four nontrivial images only.
 */
inline SphereCounts quotient_sphere_counts(const TorusParams& params, int depth,
                                           std::size_t element_limit = detail::kDefaultElementLimit) {
    if (depth < 0) throw std::invalid_argument("sphere depth must be non-negative");
    const Presentation pres(params);
    const detail::KeyCodec codec = detail::KeyCodec::choose(pres, 0);

    // Alternating words with exponents mod p (resp. q); no central carry.
    auto fp_multiply = [&pres](std::vector<Syllable> word, const Syllable& s) {
        if (!word.empty() && word.back().letter == s.letter) {
            int sum = (word.back().exp + s.exp) % pres.exponents[s.letter];
            if (sum == 0)
                word.pop_back();
            else
                word.back().exp = sum;
        } else {
            word.push_back(s);
        }
        return word;
    };

    const std::vector<Syllable> moves = {
        {0, 1}, {0, params.p - 1}, {1, 1}, {1, params.q - 1}};

    std::unordered_set<std::string> visited;
    std::vector<std::vector<Syllable>> frontier{{}};
    visited.insert(codec.encode({0, {}}));

    std::vector<Int> counts;
    counts.reserve(static_cast<std::size_t>(depth) + 1);
    counts.emplace_back(1);
    for (int n = 1; n <= depth; ++n) {
        std::vector<std::vector<Syllable>> next;
        for (const auto& w : frontier) {
            for (const Syllable& s : moves) {
                auto h = fp_multiply(w, s);
                if (visited.insert(codec.encode({0, h})).second) {
                    if (visited.size() > element_limit)
                        throw std::runtime_error("quotient ball exceeded the element limit");
                    next.push_back(std::move(h));
                }
            }
        }
        counts.emplace_back(next.size());
        frontier = std::move(next);
    }
    return {params.p, params.q, std::move(counts)};
}

}  // namespace torusgrowth
