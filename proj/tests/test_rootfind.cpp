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
#include "interlace/rootfind.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace interlace;

namespace {

void check_close(const ZeroSet& zs, const std::vector<double>& expected, double tol) {
    REQUIRE(zs.size() == static_cast<Eigen::Index>(expected.size()));
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(zs.zeros(static_cast<Eigen::Index>(i)) == doctest::Approx(expected[i]).epsilon(tol));
}

bool within(double a, double b, double tol) { return std::abs(a - b) <= tol; }

} // namespace

TEST_CASE("tridiagonal path") {
    const auto l1 = zeros_of(FamilySpec::laguerre(0, 1));
    REQUIRE(l1.size() == 1);
    CHECK(within(l1.zeros(0), 1.0, 1e-14));
    CHECK(l1.method == RootMethod::JacobiMatrix);

    const std::vector<double> x6{-0.203565, 0.101387, 0.369625, 0.59992, 0.785274, 0.918787};
    const auto j6 = zeros_of(FamilySpec::jacobi(2, 14, 6));
    REQUIRE(j6.size() == 6);
    for (Eigen::Index i = 0; i < 6; ++i) CHECK(within(j6.zeros(i), x6[static_cast<std::size_t>(i)], 1e-5));

    const std::vector<double> z7{-0.906419, -0.784335, -0.624494, -0.431566, -0.210968, 0.032615, 0.300166};
    const auto j7 = zeros_of(FamilySpec::jacobi(15, 3, 7));
    REQUIRE(j7.size() == 7);
    for (Eigen::Index i = 0; i < 7; ++i) CHECK(within(j7.zeros(i), z7[static_cast<std::size_t>(i)], 1e-5));
    CHECK(j7.bound < 1e-12);
    CHECK(zeros_of(FamilySpec::jacobi(1, 1, 0)).size() == 0);
}

TEST_CASE("recurrence with non-positive lambda is rejected") {
    RecurrenceCoeffs<Rational> rc;
    rc.c = {Rational(0), Rational(0)};
    rc.lambda = {Rational(0), Rational(-1)};
    CHECK_THROWS_AS((void)zeros_from_recurrence(rc), RootFindError);
}

TEST_CASE("companion path") {
    const RationalPolynomial x2m1{Rational(-1), Rational(0), Rational(1)};
    const auto z = zeros_general(x2m1);
    REQUIRE(z.size() == 2);
    CHECK(within(z.zeros(0), -1.0, 1e-15));
    CHECK(within(z.zeros(1), 1.0, 1e-15));
    CHECK(z.method == RootMethod::Companion);

    const auto n3 = zeros_general(narayana_reduced(3));
    REQUIRE(n3.size() == 2);
    CHECK(within(n3.zeros(0), (-3 - std::sqrt(5.0)) / 2, 1e-14));
    CHECK(within(n3.zeros(1), (-3 + std::sqrt(5.0)) / 2, 1e-14));

    const auto n4 = zeros_of(FamilySpec::narayana(FamilyKind::NarayanaReduced, 4));
    REQUIRE(n4.size() == 3);
    CHECK(n4.max() < 0);

    const RationalPolynomial no_real{Rational(1), Rational(0), Rational(1)};
    CHECK_THROWS_AS((void)zeros_general(no_real), RootFindError);
}

TEST_CASE("companion and tridiagonal paths agree") {
    for (long n = 1; n <= 12; ++n) {
        for (const auto& spec : {FamilySpec::krawtchouk(make_rational(1, 3), 12, n),
                                 FamilySpec::meixner(make_rational(3, 2), make_rational(1, 2), n)}) {
            const auto a = zeros_orthogonal(spec);
            const auto b = zeros_general(monic_by_recurrence(spec));
            REQUIRE(a.size() == b.size());
            for (Eigen::Index i = 0; i < a.size(); ++i)
                CHECK(std::abs(a.zeros(i) - b.zeros(i)) <= 1e-9 * std::max(1.0, std::abs(a.zeros(i))));
        }
    }
}

TEST_CASE("rational roots are recovered") {
    for (int deg = 1; deg <= 10; ++deg) {
        auto roots = oracle::random_rationals(1000 + static_cast<std::uint64_t>(deg), deg, -3, 3, 7);
        const auto p = from_roots<Rational>(roots);
        std::sort(roots.begin(), roots.end());
        const auto z = zeros_general(p);
        REQUIRE(z.size() == deg);
        for (int i = 0; i < deg; ++i) {
            const double r = roots[static_cast<std::size_t>(i)].get_d();
            CHECK(std::abs(z.zeros(i) - r) <= 1e-10 * std::max(1.0, std::abs(r)));
        }
    }
}

TEST_CASE("sign_at_zeros") {
    const FloatPolynomial x{0.0, 1.0};
    ZeroSet zs;
    zs.zeros = Eigen::VectorXd(2);
    zs.zeros << -1.0, 1.0;
    CHECK(sign_at_zeros(x, zs) == std::vector<int>{-1, 1});

    // Q_{n+1} at zeros of an interlacing G_{n+1} alternates in sign.
    const auto g = zeros_of(FamilySpec::laguerre(0, 6));
    const auto q = demote(monic_by_recurrence(FamilySpec::laguerre(1, 6)));
    const auto s = sign_at_zeros(q, g);
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] == -s[i - 1]);
    for (int v : s) CHECK(v != 0);

    // own zeros evaluate to zero within tolerance
    const auto own = zeros_of(FamilySpec::laguerre(0, 6));
    for (int v : sign_at_zeros(demote(monic_by_recurrence(FamilySpec::laguerre(0, 6))), own)) CHECK(v == 0);
}

TEST_CASE("compensated evaluation") {
    const FloatPolynomial p{-1.0, 0.0, 1.0};
    const auto v = eval_compensated(p, 1.0);
    CHECK(v.value == 0.0);
    CHECK(v.error_bound >= 0.0);
    const auto rc = demote(recurrence_coeffs(FamilySpec::laguerre(0, 3)));
    const auto [val, der] = eval_recurrence(rc, 0.0);
    CHECK(within(val, eval(demote(monic_by_recurrence(FamilySpec::laguerre(0, 3))), 0.0), 1e-12));
    (void)der;
    check_close(zeros_of(FamilySpec::laguerre(0, 1)), {1.0}, 1e-14);
}
