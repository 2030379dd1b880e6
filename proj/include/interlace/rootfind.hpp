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
 * @file rootfind.hpp
 * @brief Real zeros of the constructed polynomials.
 *
 * Two independent paths:
 *  - orthogonal families: eigenvalues of the symmetric tridiagonal (Jacobi) matrix with
 *    diagonal c_k and off-diagonal sqrt(lambda_k), Newton-polished on the recurrence;
 *  - anything else: eigenvalues of the balanced companion matrix, Newton-polished with a
 *    compensated Horner evaluation of the expanded coefficients.
 */
#ifndef INTERLACE_ROOTFIND_HPP
#define INTERLACE_ROOTFIND_HPP

#include "interlace/families.hpp"
#include "interlace/polynomial.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace interlace {

/// Two zeros closer than this cannot be strictly ordered; overridable per call.
inline constexpr double kDefaultSeparationFloor = 1e-9;

/// Companion eigenvalues with |Im| <= kRealityThreshold * max(1, |Re|) count as real.
inline constexpr double kRealityThreshold = 1e-8;

enum class RootMethod { JacobiMatrix, Companion };

std::string_view method_name(RootMethod method);

class RootFindError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ZeroSet {
    Eigen::VectorXd zeros;  // strictly increasing
    double bound = 0.0;     // max over zeros of |p(z)| / |p'(z)| after polishing
    RootMethod method = RootMethod::Companion;
    std::string source;

    [[nodiscard]] Eigen::Index size() const { return zeros.size(); }
    [[nodiscard]] double min() const { return zeros(0); }
    [[nodiscard]] double max() const { return zeros(zeros.size() - 1); }
};

/// Value and derivative of the monic polynomial defined by a recurrence.
std::pair<double, double> eval_recurrence(const RecurrenceCoeffs<double>& rc, double x);

/// Zeros from recurrence coefficients (all lambda_k, k >= 2, must be positive).
ZeroSet zeros_from_recurrence(const RecurrenceCoeffs<Rational>& rc, std::string source = {});

/// Jacobi, Laguerre, Krawtchouk or Meixner.
ZeroSet zeros_orthogonal(const FamilySpec& spec);

/// Companion path; degree-0 input gives an empty set. Throws RootFindError when an
/// eigenvalue fails the reality threshold.
ZeroSet zeros_general(const FloatPolynomial& p, std::string source = {});
ZeroSet zeros_general(const RationalPolynomial& p, std::string source = {});

/// Spectral path for orthogonal families, companion path for the Narayana kinds.
ZeroSet zeros_of(const FamilySpec& spec);

/// p(x) and an a-priori bound on its rounding error, via error-free transformations.
struct CompensatedValue {
    double value;
    double error_bound;
};
CompensatedValue eval_compensated(const FloatPolynomial& p, double x);

/// Sign of p at each zero: -1, +1, or 0 when |p(z)| is within its rounding-error bound.
std::vector<int> sign_at_zeros(const FloatPolynomial& p, const ZeroSet& zs);

} // namespace interlace

#endif
