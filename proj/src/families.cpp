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

#include "interlace/families.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace interlace {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 8> kKindNames{{
    {FamilyKind::Jacobi, "jacobi"},
    {FamilyKind::Laguerre, "laguerre"},
    {FamilyKind::Krawtchouk, "krawtchouk"},
    {FamilyKind::Meixner, "meixner"},
    {FamilyKind::Narayana, "narayana"},
    {FamilyKind::NarayanaReduced, "narayana-reduced"},
    {FamilyKind::NarayanaChristoffel, "narayana-christoffel"},
    {FamilyKind::NarayanaPerturbed, "narayana-perturbed"},
}};

constexpr std::array<std::pair<CorollaryId, std::string_view>, 8> kCorollaryNames{{
    {CorollaryId::Krawtchouk31, "krawtchouk-3.1"},
    {CorollaryId::Meixner32, "meixner-3.2"},
    {CorollaryId::Narayana33, "narayana-3.3"},
    {CorollaryId::Narayana34, "narayana-3.4"},
    {CorollaryId::Jacobi35, "jacobi-3.5"},
    {CorollaryId::Jacobi36, "jacobi-3.6"},
    {CorollaryId::JacobiRemark42, "jacobi-4.2"},
    {CorollaryId::Laguerre37, "laguerre-3.7"},
}};

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidArgument(message);
}

bool is_narayana(FamilyKind k) {
    return k == FamilyKind::Narayana || k == FamilyKind::NarayanaReduced || k == FamilyKind::NarayanaChristoffel ||
           k == FamilyKind::NarayanaPerturbed;
}

RecurrenceCoeffs<Rational> jacobi_recurrence(const Rational& a, const Rational& b, long degree) {
    RecurrenceCoeffs<Rational> rc;
    for (long k = 0; k < degree; ++k) {
        const Rational s = 2 * k + a + b;
        if (k == 0) {
            // (b^2 - a^2)/((a+b)(a+b+2)) with the removable a+b = 0 singularity cancelled
            rc.c.emplace_back((b - a) / (a + b + 2));
            rc.lambda.emplace_back(0);
        } else if (k == 1) {
            rc.c.emplace_back((b * b - a * a) / (s * (s + 2)));
            // general formula with the common factor (1 + a + b) cancelled
            rc.lambda.emplace_back(4 * (1 + a) * (1 + b) / ((2 + a + b) * (2 + a + b) * (3 + a + b)));
        } else {
            rc.c.emplace_back((b * b - a * a) / (s * (s + 2)));
            rc.lambda.emplace_back(4 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1) * (s - 1)));
        }
    }
    return rc;
}

RecurrenceCoeffs<Rational> laguerre_recurrence(const Rational& a, long degree) {
    RecurrenceCoeffs<Rational> rc;
    for (long k = 0; k < degree; ++k) {
        rc.c.emplace_back(2 * k + a + 1);
        rc.lambda.emplace_back(k * (k + a));
    }
    return rc;
}

RecurrenceCoeffs<Rational> meixner_recurrence(const Rational& t, const Rational& w, long degree) {
    RecurrenceCoeffs<Rational> rc;
    const Rational one_minus_w = 1 - w;
    for (long k = 0; k < degree; ++k) {
        rc.c.emplace_back((k + w * (k + t)) / one_minus_w);
        rc.lambda.emplace_back(w * k * (k + t - 1) / (one_minus_w * one_minus_w));
    }
    return rc;
}

long to_long(const Rational& q) { return q.get_num().get_si(); }

/// (-x)_k = prod_{i<k} (i - x) as a polynomial in x.
RationalPolynomial falling_in_minus_x(long k) {
    auto p = RationalPolynomial::constant(Rational(1));
    for (long i = 0; i < k; ++i) p = p * RationalPolynomial{Rational(i), Rational(-1)};
    return p;
}

RationalPolynomial terminating_2f1(long n, const Rational& lower, const Rational& z) {
    RationalPolynomial sum;
    Rational term_const(1); // (-n)_k z^k / ((lower)_k k!)
    for (long k = 0; k <= n; ++k) {
        if (k > 0) term_const *= Rational(-n + k - 1) * z / ((lower + k - 1) * k);
        sum += term_const * falling_in_minus_x(k);
    }
    return sum;
}

RationalPolynomial narayana_reduced_by_recurrence(long n) {
    // (k+2) N_{k+1} = (2k+1)(x+1) N_k - (k-1)(x-1)^2 N_{k-1}, reduced form, N_1 = 1
    const RationalPolynomial x_plus_1{Rational(1), Rational(1)};
    const RationalPolynomial x_minus_1_sq{Rational(1), Rational(-2), Rational(1)};
    RationalPolynomial prev;
    auto cur = RationalPolynomial::constant(Rational(1));
    for (long k = 1; k < n; ++k) {
        RationalPolynomial next = (Rational(2 * k + 1) * (x_plus_1 * cur) - Rational(k - 1) * (x_minus_1_sq * prev)) /
                                  Rational(k + 2);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace

std::string_view kind_name(FamilyKind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return name;
    throw std::logic_error("unknown family kind");
}

FamilyKind parse_kind(std::string_view name) {
    for (const auto& [k, n] : kKindNames)
        if (n == name) return k;
    throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

FamilySpec FamilySpec::jacobi(const Rational& alpha, const Rational& beta, long n) {
    return {FamilyKind::Jacobi, {{"alpha", alpha}, {"beta", beta}}, n};
}
FamilySpec FamilySpec::laguerre(const Rational& alpha, long n) { return {FamilyKind::Laguerre, {{"alpha", alpha}}, n}; }
FamilySpec FamilySpec::krawtchouk(const Rational& p, long big_n, long n) {
    return {FamilyKind::Krawtchouk, {{"N", Rational(big_n)}, {"p", p}}, n};
}
FamilySpec FamilySpec::meixner(const Rational& t, const Rational& w, long n) {
    return {FamilyKind::Meixner, {{"t", t}, {"w", w}}, n};
}
FamilySpec FamilySpec::narayana(FamilyKind kind, long n) {
    if (!is_narayana(kind)) throw InvalidArgument("not a Narayana kind");
    return {kind, {}, n};
}

const Rational& FamilySpec::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end())
        throw InvalidArgument("missing parameter '" + name + "' for " + std::string(kind_name(kind)));
    return it->second;
}

FamilySpec FamilySpec::with_degree(long degree) const {
    FamilySpec s = *this;
    s.n = degree;
    return s;
}

bool FamilySpec::is_orthogonal() const { return !is_narayana(kind); }

void validate(const FamilySpec& spec) {
    const std::string who(kind_name(spec.kind));
    require(spec.n >= 0, who + ": degree n must be >= 0");
    switch (spec.kind) {
    case FamilyKind::Jacobi:
        require(spec.param("alpha") > -1, "jacobi: alpha > -1 violated");
        require(spec.param("beta") > -1, "jacobi: beta > -1 violated");
        break;
    case FamilyKind::Laguerre:
        require(spec.param("alpha") > -1, "laguerre: alpha > -1 violated");
        break;
    case FamilyKind::Krawtchouk: {
        const Rational& p = spec.param("p");
        const Rational& big_n = spec.param("N");
        require(p > 0 && p < 1, "krawtchouk: 0 < p < 1 violated");
        require(is_integer(big_n) && big_n >= 1, "krawtchouk: N must be a positive integer");
        require(spec.n <= big_n, "krawtchouk: n <= N violated (n=" + std::to_string(spec.n) + ", N=" + to_string(big_n) + ")");
        break;
    }
    case FamilyKind::Meixner:
        require(spec.param("t") > 0, "meixner: t > 0 violated");
        require(spec.param("w") > 0 && spec.param("w") < 1, "meixner: 0 < w < 1 violated");
        break;
    case FamilyKind::Narayana:
    case FamilyKind::NarayanaReduced:
        require(spec.n >= 1, who + ": n >= 1 required");
        break;
    case FamilyKind::NarayanaChristoffel:
    case FamilyKind::NarayanaPerturbed:
        require(spec.n >= 2, who + ": n >= 2 required");
        break;
    }
}

std::string describe(const FamilySpec& spec) {
    std::string out(kind_name(spec.kind));
    out += "(";
    bool first = true;
    for (const auto& [name, value] : spec.params) {
        if (!first) out += ",";
        out += name + "=" + to_string(value);
        first = false;
    }
    out += (first ? "n=" : ";n=") + std::to_string(spec.n) + ")";
    return out;
}

long polynomial_degree(const FamilySpec& spec) {
    switch (spec.kind) {
    case FamilyKind::NarayanaReduced:
    case FamilyKind::NarayanaChristoffel:
    case FamilyKind::NarayanaPerturbed:
        return spec.n - 1;
    default:
        return spec.n;
    }
}

RecurrenceCoeffs<Rational> krawtchouk_recurrence(const Rational& p, long big_n, long degree) {
    if (degree > big_n + 1) throw InvalidArgument("krawtchouk: degree exceeds N+1");
    RecurrenceCoeffs<Rational> rc;
    for (long k = 0; k < degree; ++k) {
        rc.c.emplace_back(k * (1 - p) + (big_n - k) * p);
        rc.lambda.emplace_back(k * p * (1 - p) * (big_n + 1 - k));
    }
    return rc;
}

RecurrenceCoeffs<Rational> recurrence_coeffs(const FamilySpec& spec) {
    validate(spec);
    switch (spec.kind) {
    case FamilyKind::Jacobi:
        return jacobi_recurrence(spec.param("alpha"), spec.param("beta"), spec.n);
    case FamilyKind::Laguerre:
        return laguerre_recurrence(spec.param("alpha"), spec.n);
    case FamilyKind::Krawtchouk:
        return krawtchouk_recurrence(spec.param("p"), to_long(spec.param("N")), spec.n);
    case FamilyKind::Meixner:
        return meixner_recurrence(spec.param("t"), spec.param("w"), spec.n);
    default:
        throw InvalidArgument(std::string(kind_name(spec.kind)) + " has no orthogonal three-term recurrence");
    }
}

RecurrenceCoeffs<double> demote(const RecurrenceCoeffs<Rational>& rc) {
    RecurrenceCoeffs<double> out;
    for (const auto& v : rc.c) out.c.push_back(v.get_d());
    for (const auto& v : rc.lambda) out.lambda.push_back(v.get_d());
    return out;
}

RationalPolynomial monic_by_recurrence(const FamilySpec& spec) {
    validate(spec);
    switch (spec.kind) {
    case FamilyKind::Narayana:
        return narayana_reduced_by_recurrence(spec.n) * RationalPolynomial::x();
    case FamilyKind::NarayanaReduced:
        return narayana_reduced_by_recurrence(spec.n);
    case FamilyKind::NarayanaChristoffel:
        return narayana_christoffel(spec.n);
    case FamilyKind::NarayanaPerturbed:
        return narayana_perturbed_p(spec.n);
    default:
        return from_recurrence(recurrence_coeffs(spec));
    }
}

Rational narayana_coeff(long n, long k) {
    if (n < 1 || k < 1 || k > n)
        throw InvalidArgument("narayana_coeff: need 1 <= k <= n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    return binomial(n, k) * binomial(n, k - 1) / n;
}

RationalPolynomial narayana_polynomial(long n) { return narayana_reduced(n) * RationalPolynomial::x(); }

RationalPolynomial narayana_reduced(long n) {
    if (n < 1) throw InvalidArgument("narayana_reduced: n >= 1 required");
    std::vector<Rational> c;
    for (long j = 0; j < n; ++j) c.push_back(narayana_coeff(n, j + 1));
    return RationalPolynomial(std::move(c));
}

Rational narayana_rho(long n) { return make_rational(2 * (2 * n + 1), n + 2); }

RationalPolynomial narayana_christoffel_by_division(long n) {
    const auto next = narayana_reduced(n + 1);
    const auto cur = narayana_reduced(n);
    const Rational rho = narayana_rho(n);
    if (rho != eval(next, Rational(1)) / eval(cur, Rational(1)))
        throw std::logic_error("narayana: closed-form rho_n disagrees with N_{n+1}(1)/N_n(1)");
    return divide_exact(next - rho * cur, Rational(1));
}

RationalPolynomial narayana_christoffel_closed_form(long n) {
    std::vector<Rational> c;
    for (long j = 0; j < n; ++j) c.push_back(make_rational(3 * n - 2 * j, n + 2) * narayana_coeff(n, j + 1));
    return RationalPolynomial(std::move(c));
}

RationalPolynomial narayana_christoffel(long n) {
    if (n < 2) throw InvalidArgument("narayana_christoffel: n >= 2 required");
    auto by_division = narayana_christoffel_by_division(n);
    if (by_division != narayana_christoffel_closed_form(n))
        throw std::logic_error("narayana_christoffel: division and closed-form constructions disagree at n=" +
                               std::to_string(n));
    return by_division;
}

RationalPolynomial narayana_perturbed_p(long n) {
    if (n < 2) throw InvalidArgument("narayana_perturbed_p: n >= 2 required");
    std::vector<Rational> d;
    for (long j = 0; j < n; ++j) {
        Rational b = binomial(n - 1, j);
        d.push_back(b * b + binomial(n - 1, j + 1) * binomial(n - 1, j - 1));
    }
    return RationalPolynomial(std::move(d));
}

RationalPolynomial hypergeometric_check(const FamilySpec& spec) {
    validate(spec);
    const long n = spec.n;
    if (spec.kind == FamilyKind::Krawtchouk) {
        const Rational& p = spec.param("p");
        const Rational big_n = spec.param("N");
        // (-N)_n p^n 2F1(-n, -x; -N; 1/p)
        return pochhammer(-big_n, n) * pow(p, n) * terminating_2f1(n, -big_n, 1 / p);
    }
    if (spec.kind == FamilyKind::Meixner) {
        const Rational& t = spec.param("t");
        const Rational& w = spec.param("w");
        // (t)_n w^n / (w-1)^n 2F1(-n, -x; t; 1 - 1/w)
        return pochhammer(t, n) * pow(w / (w - 1), n) * terminating_2f1(n, t, 1 - 1 / w);
    }
    throw InvalidArgument("hypergeometric_check applies to krawtchouk and meixner only");
}

Rational weight_at(const FamilySpec& spec, long x) {
    validate(spec);
    if (spec.kind == FamilyKind::Krawtchouk) {
        const long big_n = to_long(spec.param("N"));
        const Rational& p = spec.param("p");
        if (x < 0 || x > big_n) throw InvalidArgument("krawtchouk weight: x outside {0..N}");
        return binomial(big_n, x) * pow(p, x) * pow(1 - p, big_n - x);
    }
    if (spec.kind == FamilyKind::Meixner) {
        if (x < 0) throw InvalidArgument("meixner weight: x outside {0, 1, ...}");
        return pochhammer(spec.param("t"), x) * pow(spec.param("w"), x) / factorial(x);
    }
    throw InvalidArgument("weight_at applies to krawtchouk and meixner only");
}

Rational krawtchouk_at_support_end(long k, const Rational& p, long big_m) {
    return factorial(k) * binomial(big_m, k) * pow(1 - p, k);
}

std::string_view corollary_name(CorollaryId id) {
    for (const auto& [c, name] : kCorollaryNames)
        if (c == id) return name;
    throw std::logic_error("unknown corollary");
}

CorollaryId parse_corollary(std::string_view name) {
    for (const auto& [c, n] : kCorollaryNames)
        if (n == name) return c;
    throw InvalidArgument("unknown corollary '" + std::string(name) + "'");
}

const std::vector<CorollaryId>& all_corollaries() {
    static const std::vector<CorollaryId> ids = [] {
        std::vector<CorollaryId> v;
        for (const auto& [c, name] : kCorollaryNames) v.push_back(c);
        return v;
    }();
    return ids;
}

FamilyKind corollary_family(CorollaryId id) {
    switch (id) {
    case CorollaryId::Krawtchouk31: return FamilyKind::Krawtchouk;
    case CorollaryId::Meixner32: return FamilyKind::Meixner;
    case CorollaryId::Narayana33: return FamilyKind::NarayanaChristoffel;
    case CorollaryId::Narayana34: return FamilyKind::NarayanaPerturbed;
    case CorollaryId::Jacobi35:
    case CorollaryId::Jacobi36:
    case CorollaryId::JacobiRemark42: return FamilyKind::Jacobi;
    case CorollaryId::Laguerre37: return FamilyKind::Laguerre;
    }
    throw std::logic_error("unknown corollary");
}

ExtraPoint extra_point(const FamilySpec& spec, CorollaryId corollary) {
    const FamilyKind expected = corollary_family(corollary);
    const bool narayana_pair = is_narayana(expected) && is_narayana(spec.kind);
    if (spec.kind != expected && !narayana_pair)
        throw InvalidArgument(std::string(corollary_name(corollary)) + " is not stated for " +
                              std::string(kind_name(spec.kind)));
    const long n = spec.n;
    Rational e;
    switch (corollary) {
    case CorollaryId::Krawtchouk31:
        e = spec.param("N") + 1 - spec.param("p") * (n + 1);
        break;
    case CorollaryId::Meixner32: {
        const Rational& w = spec.param("w");
        e = -spec.param("t") + w * (n + 1) / (1 - w);
        break;
    }
    case CorollaryId::Narayana33:
        e = 1;
        break;
    case CorollaryId::Narayana34:
        e = -1;
        break;
    case CorollaryId::Jacobi35: {
        const Rational& a = spec.param("alpha");
        const Rational& b = spec.param("beta");
        e = -1 + 2 * (n + 1) * (n + a + 1) / ((2 * n + a + b + 2) * (2 * n + a + b + 3));
        break;
    }
    case CorollaryId::Jacobi36:
    case CorollaryId::JacobiRemark42: {
        const Rational& a = spec.param("alpha");
        const Rational& b = spec.param("beta");
        e = (a - b) / (2 * n + a + b + 2);
        break;
    }
    case CorollaryId::Laguerre37:
        e = n + 1;
        break;
    }
    e.canonicalize();
    return {spec, e, corollary};
}

} // namespace interlace
