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
 * @file families.hpp
 * @brief Monic Jacobi, Laguerre, Krawtchouk, Meixner and Narayana-type polynomials.
 *
 * Everything here is exact: parameters are rationals and the constructed polynomials are
 * `RationalPolynomial`. Floating point enters only in the root finder.
 *
 * Recurrence convention (monic, P_0 = 1, P_{-1} = 0):
 *
 *     P_{k+1}(x) = (x - c_{k+1}) P_k(x) - lambda_{k+1} P_{k-1}(x)
 */
#ifndef INTERLACE_FAMILIES_HPP
#define INTERLACE_FAMILIES_HPP

#include "interlace/polynomial.hpp"
#include "interlace/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace interlace {

enum class FamilyKind {
    Jacobi,              // alpha, beta
    Laguerre,            // alpha
    Krawtchouk,          // p, N
    Meixner,             // t, w
    Narayana,            // N_n(x), degree n
    NarayanaReduced,     // N_n(x)/x, degree n-1
    NarayanaChristoffel, // Christoffel-type perturbation at x = 1, degree n-1
    NarayanaPerturbed,   // coefficients d_{n,j}, degree n-1
};

std::string_view kind_name(FamilyKind kind);
FamilyKind parse_kind(std::string_view name);

using ParamMap = std::map<std::string, Rational>;

struct FamilySpec {
    FamilyKind kind = FamilyKind::Jacobi;
    ParamMap params;
    long n = 0;

    static FamilySpec jacobi(const Rational& alpha, const Rational& beta, long n);
    static FamilySpec laguerre(const Rational& alpha, long n);
    static FamilySpec krawtchouk(const Rational& p, long big_n, long n);
    static FamilySpec meixner(const Rational& t, const Rational& w, long n);
    static FamilySpec narayana(FamilyKind kind, long n);

    /// Throws InvalidArgument when the parameter is missing.
    [[nodiscard]] const Rational& param(const std::string& name) const;
    [[nodiscard]] FamilySpec with_degree(long degree) const;
    [[nodiscard]] bool is_orthogonal() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws InvalidArgument naming the violated constraint.
void validate(const FamilySpec& spec);

/// e.g. "jacobi(alpha=2,beta=14;n=6)".
std::string describe(const FamilySpec& spec);

/// Degree of the polynomial the spec denotes (n, or n-1 for the reduced Narayana kinds).
long polynomial_degree(const FamilySpec& spec);

template <ScalarField S>
struct RecurrenceCoeffs {
    std::vector<S> c;      // c[k] = c_{k+1}
    std::vector<S> lambda; // lambda[k] = lambda_{k+1}; lambda[0] multiplies P_{-1} and is 0
};

/// First `spec.n` recurrence coefficients of an orthogonal family.
RecurrenceCoeffs<Rational> recurrence_coeffs(const FamilySpec& spec);

/// Krawtchouk coefficients up to `degree`, which may reach N+1 (the member vanishing on
/// the whole support {0..N}); FamilySpec itself caps n at N.
RecurrenceCoeffs<Rational> krawtchouk_recurrence(const Rational& p, long big_n, long degree);

/// Runs the recurrence to degree c.size().
template <ScalarField S>
Polynomial<S> from_recurrence(const RecurrenceCoeffs<S>& rc) {
    Polynomial<S> prev;
    auto cur = Polynomial<S>::constant(S(1));
    for (std::size_t k = 0; k < rc.c.size(); ++k) {
        Polynomial<S> next = mul_linear(cur, rc.c[k]) - rc.lambda[k] * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

RecurrenceCoeffs<double> demote(const RecurrenceCoeffs<Rational>& rc);

/// The spec's polynomial built by forward recurrence (Narayana kinds use their own relations).
RationalPolynomial monic_by_recurrence(const FamilySpec& spec);

/// Narayana number c_{n,k} = C(n,k) C(n,k-1) / n, 1 <= k <= n.
Rational narayana_coeff(long n, long k);

/// N_n(x) from its Narayana-number coefficients.
RationalPolynomial narayana_polynomial(long n);

/// Reduced Narayana polynomial N_n(x)/x from closed-form coefficients, n >= 1.
RationalPolynomial narayana_reduced(long n);

/// rho_n = N_{n+1}(1) / N_n(1) in closed form, 2(2n+1)/(n+2).
Rational narayana_rho(long n);

/// (N_{n+1} - rho_n N_n) / (x - 1) by synthetic division (reduced polynomials).
RationalPolynomial narayana_christoffel_by_division(long n);

/// Closed-form coefficients (3n - 2j)/(n + 2) * c_{n,j+1}.
RationalPolynomial narayana_christoffel_closed_form(long n);

/// Both constructions, required to agree exactly; n >= 2.
RationalPolynomial narayana_christoffel(long n);

/// d_{n,j} = C(n-1,j)^2 + C(n-1,j+1) C(n-1,j-1), n >= 2.
RationalPolynomial narayana_perturbed_p(long n);

/// Krawtchouk or Meixner polynomial expanded from its terminating 2F1 sum.
RationalPolynomial hypergeometric_check(const FamilySpec& spec);

/// Discrete orthogonality weight at a support point (Krawtchouk, Meixner).
Rational weight_at(const FamilySpec& spec, long x);

/// K_k(M; p, M) = k! C(M, k) (1-p)^k, the value at the right end of the support.
Rational krawtchouk_at_support_end(long k, const Rational& p, long big_m);

/// Theorem instances of the examples, one per corollary / remark.
enum class CorollaryId {
    Krawtchouk31,
    Meixner32,
    Narayana33,
    Narayana34,
    Jacobi35,
    Jacobi36,
    JacobiRemark42,
    Laguerre37,
};

std::string_view corollary_name(CorollaryId id);
CorollaryId parse_corollary(std::string_view name);
const std::vector<CorollaryId>& all_corollaries();

/// The family (and parameter names) a corollary is stated for.
FamilyKind corollary_family(CorollaryId id);

struct ExtraPoint {
    FamilySpec family;
    Rational value;
    CorollaryId slot;
};

/// Closed-form added interlacing point E for a (family, corollary) pair; spec.n is the
/// degree of the corollary's P_n.
ExtraPoint extra_point(const FamilySpec& spec, CorollaryId corollary);

} // namespace interlace

#endif
