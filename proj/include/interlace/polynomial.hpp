/*
   Copyright 2026 The interlace authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over an exact or a binary floating scalar.
 *
 * `Polynomial<Rational>` is the carrier for identity checks (every operation is exact),
 * `Polynomial<double>` the carrier for zero computation. The two never mix implicitly:
 * crossing from exact to float is the explicit `demote()`.
 *
 * Coefficients are stored in ascending degree; the zero polynomial is the empty vector
 * and a nonzero polynomial always has a nonzero leading coefficient.
 */
#ifndef INTERLACE_POLYNOMIAL_HPP
#define INTERLACE_POLYNOMIAL_HPP

#include "interlace/rational.hpp"

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace interlace {

template <typename S>
concept ScalarField = std::same_as<S, Rational> || std::floating_point<S>;

template <ScalarField S>
class Polynomial {
public:
    using Scalar = S;

    Polynomial() = default;
    Polynomial(std::initializer_list<S> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const S& c) { return Polynomial(std::vector<S>{c}); }
    static Polynomial x() { return Polynomial(std::vector<S>{S(0), S(1)}); }
    static Polynomial monomial(std::size_t degree, const S& c = S(1)) {
        std::vector<S> v(degree + 1, S(0));
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    /// -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] std::span<const S> coeffs() const { return coeffs_; }
    [[nodiscard]] S coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : S(0); }
    [[nodiscard]] S leading() const {
        if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }
    [[nodiscard]] bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == S(1); }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), S(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), S(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const S& c) {
        for (auto& a : coeffs_) a *= c;
        trim();
        return *this;
    }
    Polynomial& operator/=(const S& c) {
        if (c == S(0)) throw std::domain_error("polynomial divided by zero scalar");
        for (auto& a : coeffs_) a /= c;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial p, const S& c) { return p *= c; }
    friend Polynomial operator*(const S& c, Polynomial p) { return p *= c; }
    friend Polynomial operator/(Polynomial p, const S& c) { return p /= c; }
    friend Polynomial operator-(Polynomial p) {
        for (auto& a : p.coeffs_) a = -a;
        return p;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<S> out(a.coeffs_.size() + b.coeffs_.size() - 1, S(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == S(0)) coeffs_.pop_back();
    }

    std::vector<S> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;
using FloatPolynomial = Polynomial<double>;

/// p(x) by Horner's scheme; exact for rationals.
template <ScalarField S>
S eval(const Polynomial<S>& p, const S& x) {
    S acc(0);
    auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// (x - root) * p.
template <ScalarField S>
Polynomial<S> mul_linear(const Polynomial<S>& p, const S& root) {
    if (p.is_zero()) return {};
    auto c = p.coeffs();
    std::vector<S> out(c.size() + 1, S(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        out[i + 1] += c[i];
        out[i] -= root * c[i];
    }
    return Polynomial<S>(std::move(out));
}

/// a*p + b*q, with b a polynomial multiplier.
template <ScalarField S>
Polynomial<S> linear_combine(const S& a, const Polynomial<S>& p, const Polynomial<S>& b, const Polynomial<S>& q) {
    return a * p + b * q;
}

/// a*p + b*q with a constant b.
template <ScalarField S>
Polynomial<S> linear_combine(const S& a, const Polynomial<S>& p, const S& b, const Polynomial<S>& q) {
    return a * p + b * q;
}

inline bool is_identically_zero(const RationalPolynomial& p) { return p.is_zero(); }

/// Quotient and remainder of p by (x - root).
template <ScalarField S>
std::pair<Polynomial<S>, S> synthetic_divide(const Polynomial<S>& p, const S& root) {
    if (p.degree() < 1) return {Polynomial<S>{}, p.coeff(0)};
    auto c = p.coeffs();
    std::vector<S> quotient(c.size() - 1, S(0));
    S carry(0);
    for (std::size_t i = c.size(); i-- > 1;) {
        carry = carry * root + c[i];
        quotient[i - 1] = carry;
    }
    S remainder = carry * root + c[0];
    return {Polynomial<S>(std::move(quotient)), remainder};
}

/// Exact division by (x - root); throws when root is not a zero of p.
inline RationalPolynomial divide_exact(const RationalPolynomial& p, const Rational& root) {
    auto [quotient, remainder] = synthetic_divide(p, root);
    if (remainder != 0) throw std::domain_error("division by a linear factor left a nonzero remainder");
    return quotient;
}

template <ScalarField S>
Polynomial<S> derivative(const Polynomial<S>& p) {
    if (p.degree() < 1) return {};
    auto c = p.coeffs();
    std::vector<S> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * S(static_cast<long>(i));
    return Polynomial<S>(std::move(out));
}

/// p(scale*x + shift).
template <ScalarField S>
Polynomial<S> compose_affine(const Polynomial<S>& p, const S& scale, const S& shift) {
    Polynomial<S> inner{shift, scale};
    Polynomial<S> out;
    auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * inner + Polynomial<S>::constant(*it);
    return out;
}

/// prod (x - r) over the given roots.
template <ScalarField S>
Polynomial<S> from_roots(std::span<const S> roots) {
    auto p = Polynomial<S>::constant(S(1));
    for (const auto& r : roots) p = mul_linear(p, r);
    return p;
}

/// Rational -> double coefficientwise; the only bridge between the two modes.
inline FloatPolynomial demote(const RationalPolynomial& p) {
    std::vector<double> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_d());
    return FloatPolynomial(std::move(out));
}

} // namespace interlace

#endif
