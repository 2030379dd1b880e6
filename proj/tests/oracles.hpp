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

// Independent reference constructions for tests. Explicit hypergeometric and
// binomial sums only; nothing here goes through recurrences or library builders.
#pragma once

#include "interlace/polynomial.hpp"
#include "interlace/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using interlace::Rational;
using interlace::RationalPolynomial;

inline Rational rising(const Rational& a, long k) {
    Rational out = 1;
    for (long i = 0; i < k; ++i) out *= a + i;
    return out;
}

inline Rational fact(long k) { return rising(Rational(1), k); }

// Generalized binomial C(a, k) for rational a.
inline Rational choose(const Rational& a, long k) {
    if (k < 0) return 0;
    Rational out = 1;
    for (long i = 0; i < k; ++i) out *= a - i;
    return out / fact(k);
}

inline RationalPolynomial monic(const RationalPolynomial& p) {
    const Rational lead = p.leading();
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
    for (auto& x : c) x /= lead;
    return RationalPolynomial(std::move(c));
}

inline RationalPolynomial power(const RationalPolynomial& p, long k) {
    auto out = RationalPolynomial::constant(1);
    for (long i = 0; i < k; ++i) out = out * p;
    return out;
}

// (-x)_k as a polynomial in x.
inline RationalPolynomial falling_neg(long k) {
    auto out = RationalPolynomial::constant(1);
    for (long i = 0; i < k; ++i) out = out * RationalPolynomial{Rational(i), Rational(-1)};
    return out;
}

inline RationalPolynomial jacobi(const Rational& alpha, const Rational& beta, long n) {
    const RationalPolynomial xm{Rational(-1, 2), Rational(1, 2)};  // (x-1)/2
    const RationalPolynomial xp{Rational(1, 2), Rational(1, 2)};   // (x+1)/2
    RationalPolynomial sum;
    for (long s = 0; s <= n; ++s) {
        const Rational w = choose(alpha + n, n - s) * choose(beta + n, s);
        sum = sum + RationalPolynomial::constant(w) * power(xm, s) * power(xp, n - s);
    }
    return monic(sum);
}

inline RationalPolynomial laguerre(const Rational& alpha, long n) {
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) {
        const Rational sign = (k % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(k)] = sign * choose(alpha + n, n - k) / fact(k);
    }
    return monic(RationalPolynomial(std::move(c)));
}

inline RationalPolynomial hyper2f1_terminating(long n, const Rational& lower, const Rational& z) {
    RationalPolynomial sum;
    Rational zk = 1;
    for (long k = 0; k <= n; ++k) {
        const Rational w = rising(Rational(-n), k) / (rising(lower, k) * fact(k)) * zk;
        sum = sum + RationalPolynomial::constant(w) * falling_neg(k);
        zk *= z;
    }
    return monic(sum);
}

// Degree N+1 is the polynomial vanishing on the whole support {0..N}.
inline RationalPolynomial krawtchouk(const Rational& p, long big_n, long n) {
    if (n == big_n + 1) {
        auto out = RationalPolynomial::constant(1);
        for (long k = 0; k <= big_n; ++k) out = out * RationalPolynomial{Rational(-k), Rational(1)};
        return out;
    }
    return hyper2f1_terminating(n, Rational(-big_n), 1 / p);
}

inline RationalPolynomial meixner(const Rational& t, const Rational& w, long n) {
    return hyper2f1_terminating(n, t, 1 - 1 / w);
}

inline Rational narayana_number(long n, long k) {
    if (k < 1 || k > n) return 0;
    return choose(Rational(n), k) * choose(Rational(n), k - 1) / n;
}

inline RationalPolynomial narayana(long n) {
    std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
    for (long k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = narayana_number(n, k);
    return RationalPolynomial(std::move(c));
}

// N_n(x) / x
inline RationalPolynomial narayana_reduced(long n) {
    const auto full = narayana(n);
    return RationalPolynomial(std::vector<Rational>(full.coeffs().begin() + 1, full.coeffs().end()));
}

// (N_{n+1} - rho N_n) / (x - 1) with rho chosen so the numerator vanishes at 1.
inline RationalPolynomial narayana_christoffel(long n) {
    const auto hi = narayana_reduced(n + 1);
    const auto lo = narayana_reduced(n);
    const Rational rho = interlace::eval(hi, Rational(1)) / interlace::eval(lo, Rational(1));
    return monic(interlace::divide_exact(hi - rho * lo, Rational(1)));
}

// Coefficients d_{n,j} = C(n-1,j)^2 + C(n-1,j+1) C(n-1,j-1), j = 0..n-1.
inline RationalPolynomial narayana_perturbed(long n) {
    std::vector<Rational> c;
    const Rational m(n - 1);
    for (long j = 0; j < n; ++j) c.push_back(choose(m, j) * choose(m, j) + choose(m, j + 1) * choose(m, j - 1));
    return RationalPolynomial(std::move(c));
}

// Random rationals with denominators up to max_den in (lo, hi).
inline std::vector<Rational> random_rationals(std::uint64_t seed, int count, long lo, long hi, long max_den) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> den(1, max_den);
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
        const long d = den(rng);
        std::uniform_int_distribution<long> num(lo * d, hi * d);
        Rational q(num(rng), d);
        q.canonicalize();
        bool fresh = true;
        for (const auto& r : out) fresh = fresh && r != q;
        if (fresh) out.push_back(q);
    }
    return out;
}

} // namespace oracle
