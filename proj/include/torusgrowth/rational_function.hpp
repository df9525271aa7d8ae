#pragma once

/**
 * @file rational_function.hpp
 *
 * Rational functions num/den over integer polynomials, kept in a canonical
 * form: num and den coprime over the rationals, integer coefficients with
 * coprime contents, and the lowest-degree nonzero coefficient of den
 * positive (the numerator absorbs the sign).  Equality of canonical forms
 * is plain sequence equality.
 */

#include "torusgrowth/polynomial.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace torusgrowth {

class RationalFunction {
public:
    RationalFunction() : num_{}, den_{1} {}

    RationalFunction(Polynomial num) : num_(std::move(num)), den_{1} {}

    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        normalize();
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by the zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial{1};
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
        Int c = boost::multiprecision::gcd(content(num_), content(den_));
        if (c > 1) {
            num_ = Polynomial(scaled(num_, c));
            den_ = Polynomial(scaled(den_, c));
        }
        if (den_.coeff(den_.order()) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    static std::vector<Int> scaled(const Polynomial& a, const Int& divisor) {
        std::vector<Int> v(a.coeffs().size());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeffs()[k] / divisor;
        return v;
    }

    Polynomial num_;
    Polynomial den_;
};

inline std::string to_pretty_string(const RationalFunction& f) {
    if (f.den() == Polynomial{1}) return to_pretty_string(f.num());
    return "(" + to_pretty_string(f.num()) + ") / (" + to_pretty_string(f.den()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << to_pretty_string(f); }

}  // namespace torusgrowth
