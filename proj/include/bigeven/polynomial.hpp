#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials with exact coefficients.
 *
 * Coefficients are stored ascending: coeffs()[i] is the coefficient of x^i,
 * trailing zeros trimmed, the zero polynomial is the empty list. The
 * coefficient type is itself a ring element, so Polynomial<Polynomial<BigInt>>
 * models polynomials in x whose coefficients are polynomials in y.
 */

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigeven/bigint.hpp"

namespace bigeven {

template <typename Coeff>
class Polynomial {
public:
    Polynomial() = default;

    Polynomial(std::initializer_list<Coeff> cs) : coeffs_(cs) { trim(); }

    explicit Polynomial(std::vector<Coeff> cs) : coeffs_(std::move(cs)) { trim(); }

    /// Constant polynomial.
    explicit Polynomial(int c) {
        if (c != 0) coeffs_.push_back(Coeff(c));
    }

    /// c * x^degree
    static Polynomial monomial(std::size_t degree, Coeff c = Coeff(1)) {
        Polynomial p;
        if (!(c == Coeff(0))) {
            p.coeffs_.resize(degree + 1, Coeff(0));
            p.coeffs_[degree] = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == Coeff(1); }

    /// Degree of a nonzero polynomial; the zero polynomial reports 0.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i; zero beyond the stored range.
    const Coeff& coeff(std::size_t i) const {
        static const Coeff zero{};
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    /// Horner evaluation.
    Coeff operator()(const Coeff& point) const {
        Coeff acc{};
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * point + coeffs_[i];
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff{});
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff{});
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial operator-() const {
        Polynomial p(*this);
        for (auto& c : p.coeffs_) c = -c;
        return p;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial p;
        if (a.is_zero() || b.is_zero()) return p;
        p.coeffs_.resize(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        p.trim();
        return p;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// In-place fused this -= a*b; avoids a temporary for the product.
    void sub_mul(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return;
        std::size_t need = a.coeffs_.size() + b.coeffs_.size() - 1;
        if (coeffs_.size() < need) coeffs_.resize(need, Coeff{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                coeff_sub_mul(coeffs_[i + j], a.coeffs_[i], b.coeffs_[j]);
            }
        }
        trim();
    }

    /// Multiply by x^e.
    Polynomial shifted(std::size_t e) const {
        Polynomial p;
        if (is_zero()) return p;
        p.coeffs_.resize(coeffs_.size() + e, Coeff{});
        for (std::size_t i = 0; i < coeffs_.size(); ++i) p.coeffs_[e + i] = coeffs_[i];
        return p;
    }

    bool operator==(const Polynomial&) const = default;

private:
    static void coeff_sub_mul(Coeff& acc, const Coeff& a, const Coeff& b) {
        if constexpr (requires { acc.sub_mul(a, b); }) {
            acc.sub_mul(a, b);
        } else {
            acc -= a * b;
        }
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Coeff{}) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

template <typename Coeff>
Polynomial<Coeff> pow(const Polynomial<Coeff>& base, unsigned e) {
    Polynomial<Coeff> r(1);
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

/// Polynomials in x over the integers.
using IntPoly = Polynomial<BigInt>;
/// Polynomials in the marker variable y (coefficient t counts compositions
/// with exactly t tracked parts).
using YPoly = Polynomial<BigInt>;
/// Polynomials in x whose coefficients are polynomials in y.
using XYPoly = Polynomial<YPoly>;

/**
 * Power-series expansion of num/den to order n_max.
 *
 * Requires den(0) == 1; then with den = sum_j q_j x^j the coefficients obey
 * a_n = p_n - sum_{j>=1} q_j a_{n-j}, which is evaluated exactly. Works for
 * scalar coefficients and for y-polynomial coefficients alike.
 */
template <typename Coeff>
std::vector<Coeff> power_series(const Polynomial<Coeff>& num, const Polynomial<Coeff>& den,
                                std::size_t n_max) {
    if (!(den.coeff(0) == Coeff(1))) {
        throw std::invalid_argument("power_series: denominator constant term must be 1");
    }
    // gather nonzero denominator terms once; builders leave large zero gaps
    std::vector<std::pair<std::size_t, const Coeff*>> terms;
    for (std::size_t j = 1; j < den.coeffs().size(); ++j) {
        if (!(den.coeffs()[j] == Coeff{})) terms.emplace_back(j, &den.coeffs()[j]);
    }
    std::vector<Coeff> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        Coeff v = num.coeff(n);
        for (const auto& [j, q] : terms) {
            if (j > n) break;
            if constexpr (requires { v.sub_mul(*q, out[n - j]); }) {
                v.sub_mul(*q, out[n - j]);
            } else {
                v -= *q * out[n - j];
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace bigeven
