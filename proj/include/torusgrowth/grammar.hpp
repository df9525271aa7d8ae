#pragma once

/**
 * @file grammar.hpp
 *
 * Third, fully combinatorial sphere-counting route: depth-first
 * enumeration of the minimal normal words z^i u of T'_{p,q}.
 *
 * A word is an alternating sequence of syllables x^a (a in [-n, n], p = 2n
 * or 2n+1) and y^b (b in [-m, m]); each syllable costs |exponent| letters
 * and the central power costs |i|.  For even p the transversal folds at
 * the top: x^n and x^{-n} name the same coset, which forces the side
 * conditions below; odd exponents have no folding and no conditions.
 *
 * Word classes counted:
 *   i > 0 : x^{-n} (and y^{-m} when q is even) never occurs.
 *   i < 0 : mirror image of the above.
 *   i = 0, p even, q odd : every x^{+n} precedes every x^{-n}.
 *   i = 0, p and q even  : type alpha (x ordered, y^{+m} absent)
 *                        + type beta  (x^{-n} absent, y ordered)
 *                        - type gamma (x^{-n} and y^{+m} absent),
 *                          the alpha/beta intersection, counted once.
 */

#include "torusgrowth/formulas.hpp"
#include "torusgrowth/oracles.hpp"
#include "torusgrowth/polynomial.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace torusgrowth {

namespace detail {

struct SyllableRule {
    int half = 0;           // largest exponent magnitude, floor(p/2)
    bool folded = false;    // p even: +half and -half name one coset
    bool allow_pos_extreme = true;
    bool allow_neg_extreme = true;
    bool plus_before_minus = false;  // every +half precedes every -half
};

inline SyllableRule unconstrained_rule(int exponent) {
    return {exponent / 2, exponent % 2 == 0, true, true, false};
}

class AlternatingWordCounter {
public:
    AlternatingWordCounter(std::array<SyllableRule, 2> rules, int budget)
        : rules_(rules), budget_(budget), counts_(static_cast<std::size_t>(budget) + 1) {}

    std::vector<Int> run() {
        descend(-1, 0, {false, false});
        return std::move(counts_);
    }

private:
    void descend(int last_letter, int used, std::array<bool, 2> neg_extreme_seen) {
        counts_[static_cast<std::size_t>(used)] += 1;
        for (int letter = 0; letter < 2; ++letter) {
            if (letter == last_letter) continue;
            const SyllableRule& rule = rules_[static_cast<std::size_t>(letter)];
            for (int magnitude = 1; magnitude <= rule.half; ++magnitude) {
                if (used + magnitude > budget_) break;
                const bool extreme = rule.folded && magnitude == rule.half;
                if (!extreme || (rule.allow_pos_extreme &&
                                 !(rule.plus_before_minus && neg_extreme_seen[static_cast<std::size_t>(letter)])))
                    descend(letter, used + magnitude, neg_extreme_seen);
                if (!extreme || rule.allow_neg_extreme) {
                    auto seen = neg_extreme_seen;
                    seen[static_cast<std::size_t>(letter)] = seen[static_cast<std::size_t>(letter)] || extreme;
                    descend(letter, used + magnitude, seen);
                }
            }
        }
    }

    std::array<SyllableRule, 2> rules_;
    int budget_;
    std::vector<Int> counts_;
};

inline std::vector<Int> count_alternating_words(const SyllableRule& x_rule, const SyllableRule& y_rule,
                                                int budget) {
    return AlternatingWordCounter({x_rule, y_rule}, budget).run();
}

// Sum over central powers z^i with the requested sign, weighting length |i|.
inline std::vector<Int> with_central_power(const std::vector<Int>& words, bool include_zero, bool both_signs) {
    std::vector<Int> out(words.size());
    for (std::size_t total = 0; total < words.size(); ++total) {
        Int acc = include_zero ? words[total] : Int(0);
        Int weight = both_signs ? 2 : 1;
        for (std::size_t d = 1; d <= total; ++d) acc += weight * words[total - d];
        out[total] = std::move(acc);
    }
    return out;
}

inline std::vector<Int> add(std::vector<Int> a, const std::vector<Int>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

inline std::vector<Int> sub(std::vector<Int> a, const std::vector<Int>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

}  // namespace detail

/// Sphere counts of T'_{p,q} by minimal-normal-word enumeration.
inline SphereCounts sphere_counts_grammar(const TorusParams& params, int depth) {
    if (depth < 0) throw std::invalid_argument("sphere depth must be non-negative");
    using namespace detail;

    // The side conditions are written for "x even, y odd"; the group is
    // symmetric in (p, q), so orient the mixed case accordingly.
    int p = params.p;
    int q = params.q;
    if (p % 2 == 1 && q % 2 == 0) std::swap(p, q);
    const SyllableRule x_all = unconstrained_rule(p);
    const SyllableRule y_all = unconstrained_rule(q);

    std::vector<Int> totals;
    if (p % 2 == 1 && q % 2 == 1) {
        totals = with_central_power(count_alternating_words(x_all, y_all, depth), true, true);
    } else if (q % 2 == 1) {
        SyllableRule x_pos = x_all, x_neg = x_all, x_ordered = x_all;
        x_pos.allow_neg_extreme = false;
        x_neg.allow_pos_extreme = false;
        x_ordered.plus_before_minus = true;
        totals = add(with_central_power(count_alternating_words(x_pos, y_all, depth), false, false),
                     with_central_power(count_alternating_words(x_neg, y_all, depth), false, false));
        totals = add(std::move(totals), count_alternating_words(x_ordered, y_all, depth));
    } else {
        SyllableRule x_pos = x_all, x_neg = x_all, x_ordered = x_all;
        SyllableRule y_pos = y_all, y_neg = y_all, y_ordered = y_all;
        x_pos.allow_neg_extreme = false;
        x_neg.allow_pos_extreme = false;
        x_ordered.plus_before_minus = true;
        y_pos.allow_neg_extreme = false;
        y_neg.allow_pos_extreme = false;
        y_ordered.plus_before_minus = true;

        totals = add(with_central_power(count_alternating_words(x_pos, y_pos, depth), false, false),
                     with_central_power(count_alternating_words(x_neg, y_neg, depth), false, false));
        totals = add(std::move(totals), count_alternating_words(x_ordered, y_neg, depth));
        totals = add(std::move(totals), count_alternating_words(x_pos, y_ordered, depth));
        totals = sub(std::move(totals), count_alternating_words(x_pos, y_neg, depth));
    }
    return {params.p, params.q, std::move(totals)};
}

}  // namespace torusgrowth
