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

#include "interlace/rootfind.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace interlace {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;
constexpr int kOrthogonalNewtonSteps = 3;
constexpr int kCompanionNewtonSteps = 5;

double gamma(int k) { return k * kUnitRoundoff / (1 - k * kUnitRoundoff); }

/// Limits a Newton correction to half the distance to the neighbouring estimates so the
/// iterate cannot jump to an adjacent zero.
double clamp_step(double step, const Eigen::VectorXd& estimates, Eigen::Index i) {
    double reach = std::numeric_limits<double>::infinity();
    if (i > 0) reach = std::min(reach, 0.5 * (estimates(i) - estimates(i - 1)));
    if (i + 1 < estimates.size()) reach = std::min(reach, 0.5 * (estimates(i + 1) - estimates(i)));
    return std::clamp(step, -reach, reach);
}

void require_strictly_increasing(const Eigen::VectorXd& z, const std::string& source) {
    for (Eigen::Index i = 0; i + 1 < z.size(); ++i)
        if (!(z(i) < z(i + 1)))
            throw RootFindError("zeros of " + source + " are not strictly increasing at index " + std::to_string(i));
}

/// Parlett-Reinsch balancing by powers of two.
void balance(Eigen::MatrixXd& a) {
    constexpr double radix = 2.0;
    const Eigen::Index n = a.rows();
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = a.col(i).cwiseAbs().sum() - std::abs(a(i, i));
            double r = a.row(i).cwiseAbs().sum() - std::abs(a(i, i));
            if (c == 0.0 || r == 0.0) continue;
            const double s = c + r;
            double f = 1.0;
            double g = r / radix;
            while (c < g) {
                f *= radix;
                c *= radix * radix;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= radix * radix;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
}

double eval_derivative(const FloatPolynomial& p, double x) {
    auto c = p.coeffs();
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) acc = acc * x + static_cast<double>(i) * c[i];
    return acc;
}

} // namespace

std::string_view method_name(RootMethod method) {
    return method == RootMethod::JacobiMatrix ? "jacobi-matrix" : "companion";
}

std::pair<double, double> eval_recurrence(const RecurrenceCoeffs<double>& rc, double x) {
    double prev = 0.0, cur = 1.0;
    double dprev = 0.0, dcur = 0.0;
    for (std::size_t k = 0; k < rc.c.size(); ++k) {
        const double next = (x - rc.c[k]) * cur - rc.lambda[k] * prev;
        const double dnext = cur + (x - rc.c[k]) * dcur - rc.lambda[k] * dprev;
        prev = cur;
        cur = next;
        dprev = dcur;
        dcur = dnext;
    }
    return {cur, dcur};
}

ZeroSet zeros_from_recurrence(const RecurrenceCoeffs<Rational>& rc, std::string source) {
    const auto n = static_cast<Eigen::Index>(rc.c.size());
    ZeroSet out;
    out.method = RootMethod::JacobiMatrix;
    out.source = std::move(source);
    if (n == 0) return out;

    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max<Eigen::Index>(n - 1, 0));
    for (Eigen::Index k = 0; k < n; ++k) diag(k) = rc.c[static_cast<std::size_t>(k)].get_d();
    for (Eigen::Index k = 1; k < n; ++k) {
        const Rational& lambda = rc.lambda[static_cast<std::size_t>(k)];
        if (lambda <= 0)
            throw RootFindError("lambda_" + std::to_string(k + 1) + " = " + to_string(lambda) +
                                " <= 0: parameters outside the orthogonality region");
        sub(k - 1) = std::sqrt(lambda.get_d());
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw RootFindError("tridiagonal eigensolve did not converge for " + out.source);

    const Eigen::VectorXd estimates = solver.eigenvalues();
    const auto rcd = demote(rc);
    out.zeros = estimates;
    for (Eigen::Index i = 0; i < n; ++i) {
        double z = estimates(i);
        for (int step = 0; step < kOrthogonalNewtonSteps; ++step) {
            const auto [value, slope] = eval_recurrence(rcd, z);
            if (slope == 0.0 || !std::isfinite(value / slope)) break;
            const double delta = clamp_step(value / slope, estimates, i);
            z -= delta;
            if (std::abs(delta) <= 4 * kUnitRoundoff * std::abs(z)) break;
        }
        out.zeros(i) = z;
        const auto [value, slope] = eval_recurrence(rcd, z);
        out.bound = std::max(out.bound, slope != 0.0 ? std::abs(value / slope) : std::numeric_limits<double>::infinity());
    }
    require_strictly_increasing(out.zeros, out.source);
    return out;
}

ZeroSet zeros_orthogonal(const FamilySpec& spec) {
    if (!spec.is_orthogonal())
        throw InvalidArgument("zeros_orthogonal: " + std::string(kind_name(spec.kind)) + " is not an orthogonal family");
    return zeros_from_recurrence(recurrence_coeffs(spec), describe(spec));
}

CompensatedValue eval_compensated(const FloatPolynomial& p, double x) {
    auto a = p.coeffs();
    if (a.empty()) return {0.0, 0.0};
    double s = a.back();
    double correction = 0.0;
    double abs_eval = std::abs(a.back());
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        const double prod = s * x;
        const double prod_err = std::fma(s, x, -prod);
        const double sum = prod + a[i];
        const double t = sum - prod;
        const double sum_err = (prod - (sum - t)) + (a[i] - t);
        correction = correction * x + (prod_err + sum_err);
        s = sum;
        abs_eval = abs_eval * std::abs(x) + std::abs(a[i]);
    }
    const double value = s + correction;
    const int n = static_cast<int>(a.size()) - 1;
    const double g = gamma(2 * n);
    return {value, kUnitRoundoff * std::abs(value) + g * g * abs_eval};
}

ZeroSet zeros_general(const FloatPolynomial& p, std::string source) {
    if (p.is_zero()) throw RootFindError("zeros_general: zero polynomial");
    ZeroSet out;
    out.method = RootMethod::Companion;
    out.source = source.empty() ? "polynomial of degree " + std::to_string(p.degree()) : std::move(source);
    const auto n = static_cast<Eigen::Index>(p.degree());
    if (n == 0) return out;

    auto a = p.coeffs();
    const double lead = a.back();
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) companion(i, n - 1) = -a[static_cast<std::size_t>(i)] / lead;
    balance(companion);

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw RootFindError("companion eigensolve did not converge for " + out.source);
    const Eigen::VectorXcd eig = solver.eigenvalues();

    std::vector<double> real_parts;
    Eigen::Index complex_count = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto z = eig(i);
        if (std::abs(z.imag()) <= kRealityThreshold * std::max(1.0, std::abs(z.real())))
            real_parts.push_back(z.real());
        else
            ++complex_count;
    }
    if (complex_count > 0)
        throw RootFindError(out.source + ": " + std::to_string(complex_count) +
                            " eigenvalue(s) above the reality threshold (non-real zeros)");
    std::sort(real_parts.begin(), real_parts.end());
    const Eigen::VectorXd estimates = Eigen::Map<Eigen::VectorXd>(real_parts.data(), n);

    out.zeros = estimates;
    for (Eigen::Index i = 0; i < n; ++i) {
        double z = estimates(i);
        for (int step = 0; step < kCompanionNewtonSteps; ++step) {
            const double value = eval_compensated(p, z).value;
            const double slope = eval_derivative(p, z);
            if (slope == 0.0 || !std::isfinite(value / slope)) break;
            const double delta = clamp_step(value / slope, estimates, i);
            z -= delta;
            if (std::abs(delta) <= 2 * kUnitRoundoff * std::abs(z)) break;
        }
        out.zeros(i) = z;
        const double slope = eval_derivative(p, z);
        out.bound = std::max(out.bound, slope != 0.0 ? std::abs(eval_compensated(p, z).value / slope)
                                                     : std::numeric_limits<double>::infinity());
    }
    require_strictly_increasing(out.zeros, out.source);
    return out;
}

ZeroSet zeros_general(const RationalPolynomial& p, std::string source) { return zeros_general(demote(p), std::move(source)); }

ZeroSet zeros_of(const FamilySpec& spec) {
    if (spec.is_orthogonal()) return zeros_orthogonal(spec);
    return zeros_general(monic_by_recurrence(spec), describe(spec));
}

std::vector<int> sign_at_zeros(const FloatPolynomial& p, const ZeroSet& zs) {
    std::vector<int> signs;
    signs.reserve(static_cast<std::size_t>(zs.size()));
    for (Eigen::Index i = 0; i < zs.size(); ++i) {
        const double z = zs.zeros(i);
        const auto [value, error] = eval_compensated(p, z);
        // the zero itself is only known to within its residual bound
        const double position = std::max(zs.bound, 16 * kUnitRoundoff * std::max(1.0, std::abs(z)));
        const double tolerance = error + std::abs(eval_derivative(p, z)) * position;
        signs.push_back(std::abs(value) <= tolerance ? 0 : (value > 0 ? 1 : -1));
    }
    return signs;
}

} // namespace interlace
