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
 * @file interlacing.hpp
 * @brief Strict interlacing tests between zero sets, with witnesses.
 *
 * Notation: p ≺ q with deg p = deg q = n means x_1 < y_1 < ... < x_n < y_n; with
 * deg p = n, deg q = n-1 it means x_1 < y_1 < ... < y_{n-1} < x_n (x zeros of p, y of q).
 *
 * No ordering is ever decided on a gap below the separation floor: such gaps give an
 * Inconclusive verdict. A genuine violation (Fail) takes precedence over an Inconclusive gap.
 */
#ifndef INTERLACE_INTERLACING_HPP
#define INTERLACE_INTERLACING_HPP

#include "interlace/rootfind.hpp"

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace interlace {

enum class VerdictKind {
    Alternate,
    InterlaceDown,
    AddedPointLeft,
    AddedPointInterior,
    AddedPointRight,
    FullInterlace,
    Fail,
    Inconclusive,
};

std::string_view verdict_name(VerdictKind kind);

/// Which of the two zero sets comes first in the merged sequence.
enum class Orientation { PBelowG, GBelowP };

std::string_view orientation_name(Orientation o);

class InterlacingError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct InterlacingVerdict {
    VerdictKind kind = VerdictKind::Fail;
    /// Fail: 0-based (first set, second set) indices of the first out-of-order adjacent pair.
    /// Inconclusive: the same for the sub-floor pair.
    std::optional<std::pair<Eigen::Index, Eigen::Index>> witness;
    std::optional<double> gap;     // Inconclusive only
    std::optional<double> e_used;  // added-point tests
    /// Number of G zeros below E (0 .. |zg|); AddedPointInterior(j) has j = e_slot.
    std::optional<Eigen::Index> e_slot;
    std::optional<Orientation> orientation;
    /// Set when the two sets also interlace without E (added-point tests), or by full_interlace.
    std::optional<Orientation> full_orientation;
    double floor = kDefaultSeparationFloor;

    [[nodiscard]] bool holds() const { return kind != VerdictKind::Fail && kind != VerdictKind::Inconclusive; }
    [[nodiscard]] std::string describe() const;
};

/// zp ≺ zq for equal sizes.
InterlacingVerdict alternates(const Eigen::VectorXd& zp, const Eigen::VectorXd& zq,
                              double floor = kDefaultSeparationFloor);

/// zp ≺ zq for |zp| = |zq| + 1.
InterlacingVerdict interlaces_down(const Eigen::VectorXd& zp, const Eigen::VectorXd& zq,
                                   double floor = kDefaultSeparationFloor);

/// E adjoined to zp, tested against zg.
///  - |zp| + 1 = |zg|: merged and zg alternate, either orientation (recorded);
///  - |zp| = |zg|: merged ≺ zg.
/// Throws InterlacingError when E is within the floor of a zero of zg.
InterlacingVerdict added_point_interlace(const Eigen::VectorXd& zp, double e, const Eigen::VectorXd& zg,
                                         double floor = kDefaultSeparationFloor);

/// Interlacing without an added point: zg ≺ zp when |zg| = |zp| + 1, either orientation
/// of alternation when the sizes agree. FullInterlace or Fail / Inconclusive.
InterlacingVerdict full_interlace(const Eigen::VectorXd& zp, const Eigen::VectorXd& zg,
                                  double floor = kDefaultSeparationFloor);

inline InterlacingVerdict alternates(const ZeroSet& zp, const ZeroSet& zq, double floor = kDefaultSeparationFloor) {
    return alternates(zp.zeros, zq.zeros, floor);
}
inline InterlacingVerdict interlaces_down(const ZeroSet& zp, const ZeroSet& zq,
                                          double floor = kDefaultSeparationFloor) {
    return interlaces_down(zp.zeros, zq.zeros, floor);
}
inline InterlacingVerdict added_point_interlace(const ZeroSet& zp, double e, const ZeroSet& zg,
                                                double floor = kDefaultSeparationFloor) {
    return added_point_interlace(zp.zeros, e, zg.zeros, floor);
}
inline InterlacingVerdict full_interlace(const ZeroSet& zp, const ZeroSet& zg, double floor = kDefaultSeparationFloor) {
    return full_interlace(zp.zeros, zg.zeros, floor);
}

/// Smallest |a_i - b_j|; +inf when either set is empty.
double min_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// Number of entries of `zeros` strictly below `x`.
Eigen::Index count_below(const Eigen::VectorXd& zeros, double x);

} // namespace interlace

#endif
