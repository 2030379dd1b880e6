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
#include "interlace/interlacing.hpp"

#include <doctest.h>

using namespace interlace;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) out(i++) = x;
    return out;
}

} // namespace

TEST_CASE("alternates") {
    CHECK(alternates(vec({0}), vec({1})).kind == VerdictKind::Alternate);

    const auto bad = alternates(vec({0, 2}), vec({1, 1.5}));
    CHECK(bad.kind == VerdictKind::Fail);
    REQUIRE(bad.witness);
    CHECK(bad.witness->first == 1);
    CHECK(bad.witness->second == 1);
    CHECK_FALSE(bad.holds());

    CHECK_THROWS_AS((void)alternates(vec({0}), vec({1, 2})), InterlacingError);

    const auto lg = zeros_of(FamilySpec::laguerre(0, 5));
    const auto lq = zeros_of(FamilySpec::laguerre(1, 5));
    CHECK(alternates(lg, lq).kind == VerdictKind::Alternate);
}

TEST_CASE("alternation below the separation floor is inconclusive") {
    const auto v = alternates(vec({0, 1}), vec({1e-12, 2}));
    CHECK(v.kind == VerdictKind::Inconclusive);
    REQUIRE(v.gap);
    CHECK(*v.gap < 1e-9);
    // the first hard failure wins over an earlier sub-floor pair
    const auto f = alternates(vec({0, 3, 4}), vec({1e-12, 2, 5}));
    CHECK(f.kind == VerdictKind::Fail);
    // a looser floor is respected
    CHECK(alternates(vec({0, 1}), vec({0.5, 2}), 0.6).kind == VerdictKind::Inconclusive);
}

TEST_CASE("interlaces_down") {
    CHECK(interlaces_down(vec({0, 2}), vec({1})).kind == VerdictKind::InterlaceDown);
    CHECK(interlaces_down(vec({0, 1}), vec({2})).kind == VerdictKind::Fail);
    CHECK_THROWS_AS((void)interlaces_down(vec({0}), vec({1})), InterlacingError);

    const auto n6 = zeros_of(FamilySpec::narayana(FamilyKind::NarayanaReduced, 7));
    const auto n5 = zeros_of(FamilySpec::narayana(FamilyKind::NarayanaReduced, 6));
    CHECK(interlaces_down(n6, n5).kind == VerdictKind::InterlaceDown);
}

TEST_CASE("added_point_interlace") {
    const auto v = added_point_interlace(vec({0.5}), -1.0, vec({0, 1}));
    CHECK(v.kind == VerdictKind::AddedPointLeft);
    CHECK(v.e_slot == 0);
    CHECK(v.full_orientation == Orientation::GBelowP);

    const auto mid = added_point_interlace(vec({-1}), 0.5, vec({0, 1}));
    CHECK(mid.kind == VerdictKind::AddedPointInterior);
    CHECK(mid.e_slot == 1);
    CHECK_FALSE(mid.full_orientation);

    const auto right = added_point_interlace(vec({0.5}), 2.0, vec({0, 1}));
    CHECK(right.kind == VerdictKind::AddedPointRight);

    CHECK(added_point_interlace(vec({1.5}), 2.0, vec({0, 1})).kind == VerdictKind::Fail);
    CHECK_THROWS_AS((void)added_point_interlace(vec({0.5}), 1.0, vec({0, 1})), InterlacingError);

    // (x+2/5) P^{(2,14)}_6 against P^{(3,15)}_6
    const auto zp = zeros_of(FamilySpec::jacobi(2, 14, 6));
    const auto zg = zeros_of(FamilySpec::jacobi(3, 15, 6));
    const auto j = added_point_interlace(zp, -0.4, zg);
    CHECK(j.holds());
    CHECK(j.e_slot == 0);

    // (x-5) L^{(0)}_4 against L^{(1)}_5
    const auto lp = zeros_of(FamilySpec::laguerre(0, 4));
    const auto lg = zeros_of(FamilySpec::laguerre(1, 5));
    const auto l = added_point_interlace(lp, 5.0, lg);
    CHECK(l.kind == VerdictKind::AddedPointInterior);
}

TEST_CASE("full_interlace") {
    const auto v = full_interlace(vec({0.5}), vec({0, 1}));
    CHECK(v.kind == VerdictKind::FullInterlace);
    CHECK(v.orientation == Orientation::GBelowP);
    CHECK(full_interlace(vec({1.5}), vec({0, 1})).kind == VerdictKind::Fail);
    CHECK(full_interlace(vec({0, 2}), vec({1, 3})).kind == VerdictKind::FullInterlace);
}

TEST_CASE("helpers and names") {
    CHECK(min_distance(vec({0, 3}), vec({1, 2.5})) == doctest::Approx(0.5));
    CHECK(count_below(vec({0, 1, 2}), 1.5) == 2);
    CHECK(verdict_name(VerdictKind::AddedPointLeft) == "AddedPointLeft");
    CHECK(orientation_name(Orientation::PBelowG) == "P_below_G");
    CHECK_FALSE(alternates(vec({0}), vec({1})).describe().empty());
}
