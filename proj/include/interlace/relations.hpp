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
 * @file relations.hpp
 * @brief Mixed recurrence relations A·P = B·G + H·Q and the interlacing theorem checkers.
 *
 * Three shapes are supported, with H = ±(x - E):
 *
 *     Thm1      A P_n = B G_{n+1} + (x - E) Q_{n+1}
 *     Thm2star  A P_n = B G_n     - (x - E) Q_{n-1}
 *     Thm2      A P_n = B G_n     - (x - E) Q_{n+1}
 *
 * A relation is always stored exactly; the identity A·P - B·G - H·Q = 0 is verified
 * coefficientwise before any floating-point check runs.
 */
#ifndef INTERLACE_RELATIONS_HPP
#define INTERLACE_RELATIONS_HPP

#include "interlace/families.hpp"
#include "interlace/interlacing.hpp"
#include "interlace/rootfind.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace interlace {

enum class RelationShape { Thm1, Thm2star, Thm2 };

std::string_view shape_name(RelationShape shape);

/// One of P, G, Q: the exact polynomial plus whatever makes its zeros cheaper or exact.
struct Component {
    RationalPolynomial poly;
    std::string label;
    std::optional<RecurrenceCoeffs<Rational>> recurrence;  // spectral zero path
    std::vector<Rational> known_roots;                     // exact roots (possibly only some)
    bool all_roots_known = false;                          // known_roots are all the zeros
};

struct MixedRelation {
    std::string id;
    long n = 0;
    ParamMap params;
    std::map<std::string, std::string> tags;  // generator metadata (oracle orientation, ...)
    RelationShape shape = RelationShape::Thm1;
    RationalPolynomial a, b, h;
    Rational e;
    Component p, g, q;
    double support_lo = -std::numeric_limits<double>::infinity();
    double support_hi = std::numeric_limits<double>::infinity();
    /// When G and P share this exact zero, test P against G / (x - root) instead of the
    /// theorem clauses (even-degree Narayana perturbation).
    std::optional<Rational> quotient_root;

    /// +1 when H = x - E, -1 when H = -(x - E).
    [[nodiscard]] int sign() const { return h.leading() > 0 ? 1 : -1; }
};

/// Exact residual A·P - B·G - H·Q.
RationalPolynomial residual(const MixedRelation& r);

/// True iff the residual is the zero polynomial.
bool verify_identity(const MixedRelation& r);

/// Throws InvalidArgument on unknown/missing parameters or out-of-range n. Throws
/// std::logic_error if the constructed relation does not verify (a construction defect).
MixedRelation build_relation(CorollaryId id, long n, const ParamMap& params);
MixedRelation build_relation(std::string_view id, long n, const ParamMap& params);

/// Parameter names a corollary expects, in display order.
std::vector<std::string> corollary_params(CorollaryId id);

/// Smallest admissible n for a corollary.
long corollary_min_n(CorollaryId id);

/// x -> scale·x + shift applied to every zero and to E (scale > 0); polynomials stay monic
/// and H keeps the form ±(x - E').
MixedRelation affine_transform(const MixedRelation& r, const Rational& scale, const Rational& shift);

enum class ClauseStatus { Pass, Fail, Skipped, Inconclusive };

std::string_view status_name(ClauseStatus s);

struct Clause {
    std::string name;
    ClauseStatus status = ClauseStatus::Skipped;
    std::string detail;
};

struct CheckReport {
    std::string relation_id;
    long n = 0;
    ParamMap params;
    std::map<std::string, std::string> tags;
    RelationShape shape = RelationShape::Thm1;
    Rational e;
    double floor = kDefaultSeparationFloor;
    bool identity_ok = false;
    std::optional<ZeroSet> zp, zg, zq;
    std::optional<InterlacingVerdict> premise_verdict;
    std::optional<InterlacingVerdict> conclusion_verdict;
    std::optional<Eigen::Index> e_slot;  // zeros of G below E
    /// Thm2 only: whether P has a zero below min(G) / above max(G) inside the support.
    std::optional<bool> extreme_left, extreme_right;
    std::optional<std::string> configuration;
    /// Set when G and P share a zero (conclusions are then skipped).
    std::optional<std::string> degeneracy;
    std::vector<Clause> clauses;
    std::vector<std::string> notes;

    /// "BelowAll", "Interior(j)" or "AboveAll".
    [[nodiscard]] std::string e_position() const;
    [[nodiscard]] const Clause* find(std::string_view name) const;
    [[nodiscard]] ClauseStatus status_of(std::string_view name) const;
    /// No "hyp.*" clause failed or was inconclusive.
    [[nodiscard]] bool hypotheses_hold() const;
    /// No clause failed or was inconclusive.
    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::size_t count(ClauseStatus s) const;
};

CheckReport check_theorem1(const MixedRelation& r, double floor = kDefaultSeparationFloor);
CheckReport check_theorem2star(const MixedRelation& r, double floor = kDefaultSeparationFloor);
CheckReport check_theorem2(const MixedRelation& r, double floor = kDefaultSeparationFloor);

/// Dispatches on r.shape.
CheckReport check_relation(const MixedRelation& r, double floor = kDefaultSeparationFloor);

/// Zeros of a component: exact roots, recurrence, or companion matrix, in that preference.
ZeroSet component_zeros(const Component& c);

// Random instances --------------------------------------------------------------------

/// Which zero set comes first in the premise interlacing of a Thm1 instance.
enum class PremiseOrientation { QBelowG, GBelowQ };

enum class EPlacement { Any, BelowAll, Interior, AboveAll };

std::string_view placement_name(EPlacement p);

struct OracleOptions {
    std::optional<PremiseOrientation> orientation;  // Thm1 only; drawn when unset
    EPlacement placement = EPlacement::Any;
    /// Thm1 with Q ≺ G and E above every zero of G: keep the draw although A < 0, to
    /// exhibit the region the theorem rules out.
    bool force_impossible = false;
    int max_retries = 1000;
};

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// G_{n+1}, Q_{n+1} interlacing, B = -x + b with b = g_1 - q_1 + E, A > 0 constant.
MixedRelation oracle_theorem1(long n, std::uint64_t seed, const OracleOptions& options = {});

/// G_n ≺ Q_{n-1}, B a constant, A = B - 1 > 0; n >= 1.
MixedRelation oracle_theorem2star(long n, std::uint64_t seed, const OracleOptions& options = {});

/// Q_{n+1} ≺ G_n, B a monic quadratic, A a positive constant, P real-rooted; n >= 1.
MixedRelation oracle_theorem2(long n, std::uint64_t seed, const OracleOptions& options = {});

} // namespace interlace

#endif
