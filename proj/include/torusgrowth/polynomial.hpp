#pragma once

/**
 * @file polynomial.hpp
 *
 * Dense univariate polynomials in the formal variable t with
 * arbitrary-precision integer coefficients.  Coefficients are stored
 * lowest degree first; the highest stored entry is nonzero (the zero
 * polynomial is the empty sequence).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace torusgrowth {

using Int = boost::multiprecision::cpp_int;

class Polynomial {
public:
    Polynomial() = default;

    Polynomial(const Int& constant) {
        if (constant != 0) coeffs_.push_back(constant);
    }

    Polynomial(long long constant) : Polynomial(Int(constant)) {}

    Polynomial(std::initializer_list<long long> coeffs) {
        coeffs_.assign(coeffs.begin(), coeffs.end());
        trim();
    }

    explicit Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// c * t^k
    static Polynomial monomial(Int c, int k) {
        if (c == 0) return {};
        std::vector<Int> v(static_cast<std::size_t>(k) + 1);
        v.back() = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of t^k (zero outside the stored range).
    const Int& coeff(int k) const {
        static const Int zero = 0;
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Coefficient of the highest-degree term; zero for the zero polynomial.
    Int leading_coefficient() const { return coeffs_.empty() ? Int(0) : coeffs_.back(); }

    /// Index of the lowest-degree nonzero term; -1 for the zero polynomial.
    int order() const {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0) return static_cast<int>(k);
        return -1;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
        return Polynomial(std::move(v));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(v));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

inline Polynomial pow(const Polynomial& a, unsigned r) {
    Polynomial result{1};
    Polynomial base = a;
    while (r > 0) {
        if (r & 1u) result *= base;
        base *= base;
        r >>= 1;
    }
    return result;
}

inline Polynomial derivative(const Polynomial& a) {
    if (a.degree() < 1) return {};
    std::vector<Int> v(static_cast<std::size_t>(a.degree()));
    for (int k = 1; k <= a.degree(); ++k) v[static_cast<std::size_t>(k - 1)] = a.coeff(k) * k;
    return Polynomial(std::move(v));
}

/// Exact evaluation by Horner's rule.
inline Int evaluate(const Polynomial& a, const Int& x) {
    Int acc = 0;
    for (int k = a.degree(); k >= 0; --k) acc = acc * x + a.coeff(k);
    return acc;
}

inline double evaluate(const Polynomial& a, double x) {
    double acc = 0.0;
    for (int k = a.degree(); k >= 0; --k) acc = acc * x + a.coeff(k).convert_to<double>();
    return acc;
}

/// gcd of the absolute values of all coefficients; 0 for the zero polynomial.
inline Int content(const Polynomial& a) {
    Int c = 0;
    for (const auto& x : a.coeffs()) {
        c = boost::multiprecision::gcd(c, x);
        if (c == 1) break;
    }
    return boost::multiprecision::abs(c);
}

/// Flips signs so the lowest-degree nonzero coefficient is positive.
inline Polynomial normalize_sign(Polynomial a) {
    int k = a.order();
    if (k >= 0 && a.coeff(k) < 0) return -a;
    return a;
}

/// a with content divided out, keeping the sign of the input.
inline Polynomial primitive_part(const Polynomial& a) {
    if (a.is_zero()) return {};
    Int c = content(a);
    std::vector<Int> v(a.coeffs().size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeffs()[k] / c;
    return Polynomial(std::move(v));
}

/// Exact quotient a / b; throws std::domain_error if b is zero or does not divide a.
inline Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("polynomial division is not exact");
    std::vector<Int> rem = a.coeffs();
    std::vector<Int> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Int& lead = b.coeffs().back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Int& top = rem[static_cast<std::size_t>(k + b.degree())];
        if (top % lead != 0) throw std::domain_error("polynomial division is not exact");
        Int q = top / lead;
        for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
        quot[static_cast<std::size_t>(k)] = std::move(q);
    }
    for (const auto& c : rem)
        if (c != 0) throw std::domain_error("polynomial division is not exact");
    return Polynomial(std::move(quot));
}

namespace detail {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
inline Polynomial pseudo_remainder(Polynomial a, const Polynomial& b) {
    const Int lead = b.leading_coefficient();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Polynomial shifted = Polynomial::monomial(a.leading_coefficient(), a.degree() - b.degree());
        a = Polynomial(Int(lead)) * a - shifted * b;
    }
    return a;
}

}  // namespace detail

/**
 * Greatest common divisor over the rationals via a primitive polynomial
 * remainder sequence, returned primitive with a positive lowest-degree
 * nonzero coefficient.  Throws std::invalid_argument when both inputs
 * are zero.
 */
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    Polynomial u = primitive_part(a);
    Polynomial v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        Polynomial r = primitive_part(detail::pseudo_remainder(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    return normalize_sign(std::move(u));
}

/// t^deg(a) * a(1/t): the coefficient sequence reversed, then trimmed.
inline Polynomial reciprocal(const Polynomial& a) {
    if (a.is_zero()) throw std::invalid_argument("reciprocal of the zero polynomial");
    std::vector<Int> v(a.coeffs().rbegin(), a.coeffs().rend());
    return Polynomial(std::move(v));
}

/// Human-readable form, e.g. "1 + 2t - t^3".
inline std::string to_pretty_string(const Polynomial& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= a.degree(); ++k) {
        const Int& c = a.coeff(k);
        if (c == 0) continue;
        Int mag = boost::multiprecision::abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (mag != 1 || k == 0) out += mag.str();
        if (k >= 1) out += "t";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& a) { return os << to_pretty_string(a); }

}  // namespace torusgrowth
