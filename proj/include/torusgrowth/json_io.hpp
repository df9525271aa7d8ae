#pragma once

/**
 * @file json_io.hpp
 *
 * JSON writers for the library's value types.  Exact integers are
 * serialized as decimal strings (they outgrow native JSON numbers),
 * floating values with 12 significant digits, and keys in a fixed order,
 * so parse -> re-serialize is byte-identical.
 */

#include "torusgrowth/polynomial.hpp"
#include "torusgrowth/rational_function.hpp"
#include "torusgrowth/oracles.hpp"
#include "torusgrowth/spectral.hpp"
#include "torusgrowth/verification.hpp"

#include <cstdio>
#include <span>
#include <string>
#include <vector>

namespace torusgrowth {

/// Shortest fixed-precision form with 12 significant digits.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string to_json(const std::vector<Int>& values) {
    std::string out = "[";
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k > 0) out += ",";
        out += "\"" + values[k].str() + "\"";
    }
    out += "]";
    return out;
}

/// ["1","2","0","-1"] for 1 + 2t - t^3, lowest degree first.
inline std::string to_json(const Polynomial& a) { return to_json(a.coeffs()); }

inline std::string to_json(const RationalFunction& f) {
    return "{\"num\":" + to_json(f.num()) + ",\"den\":" + to_json(f.den()) + "}";
}

inline std::string to_json(const SphereCounts& s) {
    return "{\"p\":" + std::to_string(s.p) + ",\"q\":" + std::to_string(s.q) +
           ",\"counts\":" + to_json(s.counts) + "}";
}

inline std::string to_json(const PerronReport& r) {
    return "{\"p\":" + std::to_string(r.p) + ",\"q\":" + std::to_string(r.q) +
           ",\"r0\":" + format_double(r.r0) + ",\"omega\":" + format_double(r.omega) +
           ",\"lemma_gcd\":" + std::to_string(r.lemma_gcd) +
           ",\"dominance_margin\":" + format_double(r.dominance_margin) +
           ",\"verdict\":\"" + to_string(r.verdict) + "\"}";
}

inline std::string to_json(std::span<const PerronReport> reports) {
    std::string out = "[";
    for (std::size_t k = 0; k < reports.size(); ++k) {
        if (k > 0) out += ",";
        out += to_json(reports[k]);
    }
    out += "]";
    return out;
}

inline std::string to_json(const VerificationRecord& r) {
    std::string routes = "[";
    for (std::size_t k = 0; k < r.routes_compared.size(); ++k) {
        if (k > 0) routes += ",";
        routes += "\"" + r.routes_compared[k] + "\"";
    }
    routes += "]";
    std::string out = "{\"p\":" + std::to_string(r.p) + ",\"q\":" + std::to_string(r.q) +
                      ",\"terms_checked\":" + std::to_string(r.terms_checked) +
                      ",\"routes_compared\":" + routes + ",\"status\":\"" +
                      (r.ok ? "OK" : "MISMATCH") + "\"";
    if (r.first_mismatch_index) out += ",\"first_mismatch_index\":" + std::to_string(*r.first_mismatch_index);
    out += "}";
    return out;
}

}  // namespace torusgrowth
