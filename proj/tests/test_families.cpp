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
#include "oracles.hpp"

#include <doctest.h>

using namespace interlace;

namespace {

RationalPolynomial rp(std::initializer_list<Rational> c) { return RationalPolynomial(std::vector<Rational>(c)); }

const std::vector<Rational> kProbabilities{make_rational(1, 4), make_rational(1, 2), make_rational(3, 4)};
const std::vector<Rational> kJacobiParams{make_rational(-1, 2), 0, 1, make_rational(5, 2), 14};

} // namespace

TEST_CASE("monic family members from the recurrence") {
    CHECK(monic_by_recurrence(FamilySpec::laguerre(0, 1)) == rp({-1, 1}));
    CHECK(monic_by_recurrence(FamilySpec::krawtchouk(make_rational(1, 2), 4, 1)) == rp({-2, 1}));
    CHECK(monic_by_recurrence(FamilySpec::jacobi(3, 3, 1)) == rp({0, 1}));
    CHECK(monic_by_recurrence(FamilySpec::krawtchouk(make_rational(1, 2), 4, 0)) == rp({1}));
}

TEST_CASE("recurrence route agrees with explicit sums") {
    for (const auto& a : kJacobiParams)
        for (const auto& b : kJacobiParams)
            for (long n = 0; n <= 8; ++n)
                CHECK(monic_by_recurrence(FamilySpec::jacobi(a, b, n)) == oracle::jacobi(a, b, n));
    for (const auto& a : kJacobiParams)
        for (long n = 0; n <= 9; ++n) CHECK(monic_by_recurrence(FamilySpec::laguerre(a, n)) == oracle::laguerre(a, n));
    for (const auto& p : kProbabilities)
        for (long big_n = 1; big_n <= 10; ++big_n)
            for (long n = 0; n <= big_n; ++n)
                CHECK(monic_by_recurrence(FamilySpec::krawtchouk(p, big_n, n)) == oracle::krawtchouk(p, big_n, n));
    for (const Rational& t : {make_rational(1, 2), Rational(1), Rational(3)})
        for (const auto& w : kProbabilities)
            for (long n = 0; n <= 9; ++n)
                CHECK(monic_by_recurrence(FamilySpec::meixner(t, w, n)) == oracle::meixner(t, w, n));
}

TEST_CASE("hypergeometric cross-check matches the recurrence") {
    CHECK(hypergeometric_check(FamilySpec::krawtchouk(make_rational(1, 2), 4, 0)) == rp({1}));
    CHECK(hypergeometric_check(FamilySpec::krawtchouk(make_rational(1, 2), 4, 1)) == rp({-2, 1}));
    const auto m1 = FamilySpec::meixner(1, make_rational(1, 2), 1);
    CHECK(hypergeometric_check(m1) == monic_by_recurrence(m1));
    const auto m5 = FamilySpec::meixner(2, make_rational(1, 3), 5);
    CHECK(hypergeometric_check(m5) == monic_by_recurrence(m5));
    CHECK_THROWS_AS((void)hypergeometric_check(FamilySpec::laguerre(0, 2)), InvalidArgument);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(FamilySpec::krawtchouk(make_rational(1, 2), 4, 5)), InvalidArgument);
    CHECK_THROWS_AS(validate(FamilySpec::krawtchouk(Rational(1), 4, 2)), InvalidArgument);
    CHECK_THROWS_AS(validate(FamilySpec::jacobi(-1, 0, 2)), InvalidArgument);
    CHECK_THROWS_AS(validate(FamilySpec::laguerre(-2, 2)), InvalidArgument);
    CHECK_THROWS_AS(validate(FamilySpec::meixner(0, make_rational(1, 2), 2)), InvalidArgument);
    CHECK_THROWS_AS(validate(FamilySpec::meixner(1, Rational(1), 2)), InvalidArgument);
    CHECK_THROWS_AS(validate(FamilySpec::narayana(FamilyKind::NarayanaReduced, 0)), InvalidArgument);
    CHECK_THROWS_AS(validate(FamilySpec::narayana(FamilyKind::NarayanaChristoffel, 1)), InvalidArgument);
    CHECK_NOTHROW(validate(FamilySpec::jacobi(make_rational(-1, 2), 14, 3)));
    CHECK(parse_kind("narayana-reduced") == FamilyKind::NarayanaReduced);
    CHECK_THROWS_AS((void)parse_kind("hermite"), InvalidArgument);
}

TEST_CASE("Narayana numbers and polynomials") {
    CHECK(narayana_coeff(3, 2) == 3);
    CHECK(narayana_coeff(1, 1) == 1);
    CHECK(narayana_coeff(4, 2) == 6);
    CHECK_THROWS_AS((void)narayana_coeff(3, 4), InvalidArgument);
    for (long n = 1; n <= 15; ++n)
        for (long k = 1; k <= n; ++k) CHECK(narayana_coeff(n, k) == oracle::narayana_number(n, k));
    CHECK(narayana_reduced(1) == rp({1}));
    CHECK(narayana_reduced(3) == rp({1, 3, 1}));
    CHECK(narayana_reduced(2) == rp({1, 1}));
    CHECK(eval(narayana_reduced(2), Rational(-1)) == 0);
    CHECK(narayana_polynomial(5) == oracle::narayana(5));
    CHECK_THROWS_AS((void)narayana_reduced(0), InvalidArgument);
}

TEST_CASE("Narayana Christoffel-type polynomial") {
    CHECK(narayana_rho(2) == make_rational(5, 2));
    CHECK(narayana_christoffel_by_division(2) == rp({make_rational(3, 2), 1}));
    CHECK(narayana_christoffel_closed_form(2) == rp({make_rational(3, 2), 1}));
    CHECK(narayana_christoffel(3).coeff(0) == make_rational(9, 5));
    for (long n = 2; n <= 12; ++n) {
        CHECK(eval(narayana_reduced(n + 1) - narayana_rho(n) * narayana_reduced(n), Rational(1)) == 0);
        CHECK(narayana_christoffel_by_division(n) == narayana_christoffel_closed_form(n));
    }
}

TEST_CASE("Narayana perturbed polynomial") {
    CHECK(narayana_perturbed_p(2) == rp({1, 1}));
    CHECK(narayana_perturbed_p(3) == rp({1, 5, 1}));
    CHECK_THROWS_AS((void)narayana_perturbed_p(1), InvalidArgument);
    const RationalPolynomial one_plus_x{Rational(1), Rational(1)};
    for (long n = 2; n <= 12; ++n) {
        const auto lhs = Rational(n) * narayana_reduced(n);
        const auto rhs = narayana_perturbed_p(n) + Rational(n - 1) * (one_plus_x * narayana_reduced(n - 1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("weights") {
    CHECK(weight_at(FamilySpec::krawtchouk(make_rational(1, 2), 2, 0), 0) == make_rational(1, 4));
    CHECK(weight_at(FamilySpec::meixner(2, make_rational(1, 2), 0), 0) == 1);
    const Rational w = make_rational(1, 2);
    CHECK(weight_at(FamilySpec::meixner(3, w, 0), 3) * 2 == Rational(3 + 2) * weight_at(FamilySpec::meixner(2, w, 0), 3));
    CHECK_THROWS_AS((void)weight_at(FamilySpec::krawtchouk(w, 2, 0), 3), InvalidArgument);
    CHECK_THROWS_AS((void)weight_at(FamilySpec::meixner(2, w, 0), -1), InvalidArgument);
}

TEST_CASE("extra interlacing points") {
    CHECK(extra_point(FamilySpec::jacobi(2, 14, 6), CorollaryId::Jacobi36).value == make_rational(-2, 5));
    CHECK(extra_point(FamilySpec::jacobi(14, 2, 7), CorollaryId::Jacobi36).value == make_rational(3, 8));
    CHECK(extra_point(FamilySpec::laguerre(0, 5), CorollaryId::Laguerre37).value == 6);
    CHECK(corollary_name(parse_corollary("jacobi-4.2")) == "jacobi-4.2");
    CHECK_THROWS_AS((void)extra_point(FamilySpec::laguerre(0, 5), CorollaryId::Jacobi36), InvalidArgument);
    CHECK(all_corollaries().size() == 8);
}

TEST_CASE("describe") {
    CHECK(describe(FamilySpec::jacobi(2, 14, 6)) == "jacobi(alpha=2,beta=14;n=6)");
    CHECK(polynomial_degree(FamilySpec::narayana(FamilyKind::NarayanaReduced, 4)) == 3);
}
