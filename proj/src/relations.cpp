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

#include "interlace/relations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace interlace {

namespace {

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string num(double v) { return fmt("%.10g", v); }

Component from_recurrence_component(RecurrenceCoeffs<Rational> rc, std::string label) {
    Component c;
    c.poly = from_recurrence(rc);
    c.recurrence = std::move(rc);
    c.label = std::move(label);
    return c;
}

Component family_component(const FamilySpec& spec) {
    validate(spec);
    if (spec.is_orthogonal()) return from_recurrence_component(recurrence_coeffs(spec), describe(spec));
    Component c;
    c.poly = monic_by_recurrence(spec);
    c.label = describe(spec);
    return c;
}

Component polynomial_component(RationalPolynomial p, std::string label) {
    Component c;
    c.poly = std::move(p);
    c.label = std::move(label);
    return c;
}

Component roots_component(std::vector<Rational> roots, std::string label) {
    Component c;
    c.poly = from_roots<Rational>(roots);
    c.known_roots = std::move(roots);
    c.all_roots_known = true;
    c.label = std::move(label);
    return c;
}

RationalPolynomial linear(const Rational& c0, const Rational& c1) { return RationalPolynomial{c0, c1}; }

/// x - e.
RationalPolynomial x_minus(const Rational& e) { return linear(-e, Rational(1)); }

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidArgument(message);
}

long integer_param(const ParamMap& params, const std::string& name) {
    const Rational& v = params.at(name);
    require(is_integer(v), name + " must be an integer");
    return v.get_num().get_si();
}

void check_params(CorollaryId id, long n, const ParamMap& params) {
    const auto expected = corollary_params(id);
    const std::string who(corollary_name(id));
    for (const auto& name : expected) require(params.count(name) != 0, who + ": missing parameter " + name);
    for (const auto& [name, value] : params)
        require(std::find(expected.begin(), expected.end(), name) != expected.end(),
                who + ": unknown parameter " + name);
    require(n >= corollary_min_n(id), who + ": n >= " + std::to_string(corollary_min_n(id)) + " required");
}

MixedRelation finish(MixedRelation r) {
    const auto res = residual(r);
    if (!res.is_zero())
        throw std::logic_error(r.id + " at n=" + std::to_string(r.n) +
                               ": mixed relation does not verify (residual degree " + std::to_string(res.degree()) +
                               ")");
    return r;
}

/// Thm1 instances where G has rational zeros at 0..N (Krawtchouk at n = N).
void note_integer_roots(Component& c, long upto) {
    for (long k = 0; k <= upto; ++k) c.known_roots.emplace_back(k);
    c.all_roots_known = true;
}

MixedRelation build_krawtchouk(long n, const ParamMap& params) {
    const Rational& p = params.at("p");
    require(p > 0 && p < 1, "krawtchouk: 0 < p < 1 violated");
    const Rational& big_n_q = params.at("N");
    const long big_n = integer_param(params, "N");
    require(big_n >= 1, "krawtchouk: N must be a positive integer");
    require(n <= big_n, "krawtchouk: n <= N violated (n=" + std::to_string(n) + ", N=" + to_string(big_n_q) + ")");

    MixedRelation r;
    r.shape = RelationShape::Thm1;
    const std::string ps = to_string(p);
    auto label = [&](long deg, long m) {
        return "krawtchouk(p=" + ps + ",N=" + std::to_string(m) + ";n=" + std::to_string(deg) + ")";
    };
    r.p = from_recurrence_component(krawtchouk_recurrence(p, big_n + 1, n), label(n, big_n + 1));
    r.g = from_recurrence_component(krawtchouk_recurrence(p, big_n, n + 1), label(n + 1, big_n));
    if (n + 1 == big_n + 1) note_integer_roots(r.g, big_n);
    r.q = from_recurrence_component(krawtchouk_recurrence(p, big_n + 1, n + 1), label(n + 1, big_n + 1));
    r.e = extra_point(FamilySpec::krawtchouk(p, big_n, n), CorollaryId::Krawtchouk31).value;
    r.a = RationalPolynomial::constant(p * (1 - p) * (n + 1) * (big_n + 1 - n));
    r.b = linear(Rational(big_n + 1), Rational(-1));
    r.h = x_minus(r.e);
    r.support_lo = 0;
    r.support_hi = static_cast<double>(big_n + 1);
    return r;
}

MixedRelation build_meixner(long n, const ParamMap& params) {
    const Rational& t = params.at("t");
    const Rational& w = params.at("w");
    MixedRelation r;
    r.shape = RelationShape::Thm1;
    r.p = family_component(FamilySpec::meixner(t, w, n));
    r.g = family_component(FamilySpec::meixner(t + 1, w, n + 1));
    r.q = family_component(FamilySpec::meixner(t, w, n + 1));
    r.e = extra_point(FamilySpec::meixner(t, w, n), CorollaryId::Meixner32).value;
    Rational a = w * (n + 1) * (n + t) / ((w - 1) * (w - 1));
    r.a = RationalPolynomial::constant(a);
    r.b = linear(-t, Rational(-1));
    r.h = x_minus(r.e);
    r.support_lo = 0;
    return r;
}

MixedRelation build_narayana33(long n) {
    MixedRelation r;
    r.shape = RelationShape::Thm2star;
    r.p = family_component(FamilySpec::narayana(FamilyKind::NarayanaChristoffel, n));
    r.g = family_component(FamilySpec::narayana(FamilyKind::NarayanaReduced, n));
    r.q = family_component(FamilySpec::narayana(FamilyKind::NarayanaReduced, n - 1));
    r.e = 1;
    r.a = RationalPolynomial::constant(make_rational(n + 2, n - 1));
    r.b = RationalPolynomial::constant(make_rational(2 * n + 1, n - 1));
    r.h = -x_minus(r.e);
    r.support_hi = 0;
    return r;
}

MixedRelation build_narayana34(long n) {
    MixedRelation r;
    r.shape = RelationShape::Thm2star;
    r.p = family_component(FamilySpec::narayana(FamilyKind::NarayanaPerturbed, n));
    r.g = family_component(FamilySpec::narayana(FamilyKind::NarayanaReduced, n));
    r.q = family_component(FamilySpec::narayana(FamilyKind::NarayanaReduced, n - 1));
    r.e = -1;
    r.a = RationalPolynomial::constant(make_rational(1, n - 1));
    r.b = RationalPolynomial::constant(make_rational(n, n - 1));
    r.h = -x_minus(r.e);
    r.support_hi = 0;
    if (n % 2 == 0) {
        r.g.known_roots.emplace_back(-1);
        r.quotient_root = Rational(-1);
    }
    return r;
}

MixedRelation build_jacobi35(long n, const ParamMap& params) {
    const Rational& al = params.at("alpha");
    const Rational& be = params.at("beta");
    require(be > 0, "jacobi-3.5: beta > 0 violated");
    MixedRelation r;
    r.shape = RelationShape::Thm1;
    r.p = family_component(FamilySpec::jacobi(al, be, n));
    r.g = family_component(FamilySpec::jacobi(al, be + 1, n + 1));
    r.q = family_component(FamilySpec::jacobi(al, be - 1, n + 1));
    r.e = extra_point(FamilySpec::jacobi(al, be, n), CorollaryId::Jacobi35).value;
    const Rational s = 2 * n + al + be;
    Rational k = 2 * (n + 1) * (n + al + 1) / ((s + 1) * (s + 2));
    Rational shift = 1 + 2 * be / (s + 3);
    r.a = linear(k * shift, k);
    r.b = linear(Rational(-1), Rational(-1));
    r.h = x_minus(r.e);
    r.support_lo = -1;
    r.support_hi = 1;
    return r;
}

MixedRelation build_jacobi36(long n, const ParamMap& params) {
    const Rational& al = params.at("alpha");
    const Rational& be = params.at("beta");
    MixedRelation r;
    r.shape = RelationShape::Thm2star;
    r.p = family_component(FamilySpec::jacobi(al, be, n));
    r.g = family_component(FamilySpec::jacobi(al + 1, be + 1, n));
    r.q = family_component(FamilySpec::jacobi(al + 1, be + 1, n - 1));
    r.e = extra_point(FamilySpec::jacobi(al, be, n), CorollaryId::Jacobi36).value;
    r.a = RationalPolynomial::constant(Rational((n + al + be + 1) / n));
    r.b = RationalPolynomial::constant(Rational((2 * n + al + be + 1) / n));
    r.h = -x_minus(r.e);
    r.support_lo = -1;
    r.support_hi = 1;
    return r;
}

MixedRelation build_jacobi42(long n, const ParamMap& params) {
    const Rational& al = params.at("alpha");
    const Rational& be = params.at("beta");
    MixedRelation r;
    r.shape = RelationShape::Thm2;
    r.p = family_component(FamilySpec::jacobi(al + 1, be + 1, n));
    r.g = family_component(FamilySpec::jacobi(al, be, n));
    r.q = family_component(FamilySpec::jacobi(al, be, n + 1));
    r.e = extra_point(FamilySpec::jacobi(al, be, n), CorollaryId::JacobiRemark42).value;
    const Rational s = 2 * n + al + be;
    Rational kappa = 4 * (n + 1) * (n + al + 1) * (n + be + 1) * (n + al + be + 1) / ((s + 1) * (s + 2) * (s + 2));
    r.a = RationalPolynomial{Rational(1), Rational(0), Rational(-1)};
    r.b = RationalPolynomial::constant(Rational(kappa / (n + 1)));
    r.h = -x_minus(r.e);
    r.support_lo = -1;
    r.support_hi = 1;
    return r;
}

MixedRelation build_laguerre(long n, const ParamMap& params) {
    const Rational& al = params.at("alpha");
    MixedRelation r;
    r.shape = RelationShape::Thm1;
    r.p = family_component(FamilySpec::laguerre(al, n));
    r.g = family_component(FamilySpec::laguerre(al + 1, n + 1));
    r.q = family_component(FamilySpec::laguerre(al, n + 1));
    r.e = n + 1;
    r.a = RationalPolynomial::constant(Rational((n + 1) * (n + al + 1)));
    r.b = linear(Rational(0), Rational(-1));
    r.h = x_minus(r.e);
    r.support_lo = 0;
    return r;
}

// Checking ----------------------------------------------------------------------------

Clause make_clause(std::string name, bool ok, std::string detail = {}) {
    return {std::move(name), ok ? ClauseStatus::Pass : ClauseStatus::Fail, std::move(detail)};
}

Clause skipped(std::string name, std::string why) { return {std::move(name), ClauseStatus::Skipped, std::move(why)}; }

Clause from_verdict(std::string name, const InterlacingVerdict& v) {
    ClauseStatus s = ClauseStatus::Pass;
    if (v.kind == VerdictKind::Fail) s = ClauseStatus::Fail;
    if (v.kind == VerdictKind::Inconclusive) s = ClauseStatus::Inconclusive;
    return {std::move(name), s, v.describe()};
}

/// Compares x against a threshold; nullopt when closer than the floor.
std::optional<bool> below(double x, double threshold, double floor) {
    if (std::abs(x - threshold) < floor) return std::nullopt;
    return x < threshold;
}

struct Work {
    CheckReport rep;
    const MixedRelation& r;
    double e = 0;
    bool zeros_ok = false;
    bool exact_common_zero = false;
    std::optional<Rational> common_root;
    bool degenerate = false;  // G and P share a zero, or E sits on a zero of G

    const Eigen::VectorXd& zp() const { return rep.zp->zeros; }
    const Eigen::VectorXd& zg() const { return rep.zg->zeros; }
    const Eigen::VectorXd& zq() const { return rep.zq->zeros; }
    void add(Clause c) { rep.clauses.push_back(std::move(c)); }
};

Clause check_a_positive(const MixedRelation& r, const Eigen::VectorXd& zg) {
    std::vector<double> points(zg.begin(), zg.end());
    double lo = r.support_lo, hi = r.support_hi;
    const double zmin = zg.size() ? zg.minCoeff() : -1.0;
    const double zmax = zg.size() ? zg.maxCoeff() : 1.0;
    const double span = std::max(1.0, zmax - zmin);
    if (!std::isfinite(lo)) lo = std::min(zmin, std::isfinite(hi) ? hi : zmin) - span;
    if (!std::isfinite(hi)) hi = std::max(zmax, lo) + span;
    const int count = r.a.degree() <= 0 ? 32 : 1024;
    for (int i = 1; i <= count; ++i) points.push_back(lo + (hi - lo) * i / (count + 1));

    double worst = std::numeric_limits<double>::infinity();
    double worst_at = 0;
    for (double x : points) {
        const Rational value = eval(r.a, Rational(x));
        if (value.get_d() < worst || value <= 0) {
            worst = value.get_d();
            worst_at = x;
        }
        if (value <= 0)
            return make_clause("hyp.A_positive", false, "A(" + num(x) + ") = " + num(value.get_d()) + " <= 0");
    }
    return make_clause("hyp.A_positive", true,
                       std::to_string(points.size()) + " samples, min A = " + num(worst) + " at " + num(worst_at));
}

/// Identity, zeros, and the hypotheses every theorem shares.
Work prelude(const MixedRelation& r, double floor) {
    Work w{CheckReport{}, r, 0.0, false, false, std::nullopt, false};
    auto& rep = w.rep;
    rep.relation_id = r.id;
    rep.n = r.n;
    rep.params = r.params;
    rep.tags = r.tags;
    rep.shape = r.shape;
    rep.e = r.e;
    rep.floor = floor;
    w.e = r.e.get_d();

    rep.identity_ok = verify_identity(r);
    w.add(make_clause("identity", rep.identity_ok, rep.identity_ok ? "exact" : "nonzero residual"));

    const std::pair<const Component*, std::optional<ZeroSet>*> parts[] = {
        {&r.p, &rep.zp}, {&r.g, &rep.zg}, {&r.q, &rep.zq}};
    const char* names[] = {"zeros.P", "zeros.G", "zeros.Q"};
    w.zeros_ok = true;
    for (int i = 0; i < 3; ++i) {
        try {
            *parts[i].second = component_zeros(*parts[i].first);
        } catch (const RootFindError& ex) {
            w.add(make_clause(names[i], false, ex.what()));
            w.zeros_ok = false;
        }
    }
    if (!w.zeros_ok) return w;

    w.add(check_a_positive(r, w.zg()));

    const Rational b_at_e = eval(r.b, r.e);
    w.add(make_clause("hyp.B_at_E_nonzero", b_at_e != 0, "B(E) = " + to_string(b_at_e)));

    for (const auto& root : r.g.known_roots)
        if (eval(r.p.poly, root) == 0) {
            w.exact_common_zero = true;
            w.common_root = root;
        }
    for (const auto& root : r.p.known_roots)
        if (eval(r.g.poly, root) == 0) {
            w.exact_common_zero = true;
            w.common_root = root;
        }
    const double dist = min_distance(w.zp(), w.zg());
    if (w.exact_common_zero)
        w.add(make_clause("hyp.no_common_zeros_G_P", false, "exact common zero at " + to_string(*w.common_root)));
    else
        w.add(make_clause("hyp.no_common_zeros_G_P", dist > floor, "min |z_P - z_G| = " + num(dist)));

    const bool e_on_g = eval(r.g.poly, r.e) == 0;
    const double e_dist = min_distance(w.zg(), Eigen::VectorXd::Constant(1, w.e));
    w.add(make_clause("hyp.E_off_G_zeros", !e_on_g && e_dist >= floor, "min |E - z_G| = " + num(e_dist)));

    w.degenerate = w.exact_common_zero || e_on_g || e_dist < floor || dist <= floor;
    if (e_on_g) {
        rep.degeneracy = "E = " + to_string(r.e) + " is an exact zero of G, hence of P";
    } else if (w.exact_common_zero) {
        rep.degeneracy = "exact common zero of G and P at " + to_string(*w.common_root);
    } else if (w.degenerate) {
        rep.degeneracy = "G and P (or E and G) closer than the separation floor";
    }

    if (eval(r.q.poly, r.e) == 0 || min_distance(w.zq(), Eigen::VectorXd::Constant(1, w.e)) < floor)
        rep.notes.push_back("E coincides with a zero of Q (permitted)");

    rep.e_slot = count_below(w.zg(), w.e);
    return w;
}

std::optional<InterlacingVerdict> try_added_point(Work& w, const std::string& clause) {
    try {
        auto v = added_point_interlace(w.zp(), w.e, w.zg(), w.rep.floor);
        w.rep.conclusion_verdict = v;
        return v;
    } catch (const InterlacingError& ex) {
        w.add({clause, ClauseStatus::Inconclusive, ex.what()});
        return std::nullopt;
    }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

/// Clause "full interlacing holds iff the side condition holds".
Clause iff_clause(std::string name, const InterlacingVerdict& full, std::optional<bool> side, const std::string& side_text) {
    if (full.kind == VerdictKind::Inconclusive || !side)
        return {std::move(name), ClauseStatus::Inconclusive, "full: " + full.describe()};
    return make_clause(std::move(name), full.holds() == *side,
                       "full interlacing=" + yes_no(full.holds()) + ", " + side_text + "=" + yes_no(*side));
}

} // namespace

std::string_view shape_name(RelationShape shape) {
    switch (shape) {
    case RelationShape::Thm1: return "thm1";
    case RelationShape::Thm2star: return "thm2star";
    case RelationShape::Thm2: return "thm2";
    }
    return "?";
}

std::string_view status_name(ClauseStatus s) {
    switch (s) {
    case ClauseStatus::Pass: return "pass";
    case ClauseStatus::Fail: return "fail";
    case ClauseStatus::Skipped: return "skipped";
    case ClauseStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string_view placement_name(EPlacement p) {
    switch (p) {
    case EPlacement::Any: return "any";
    case EPlacement::BelowAll: return "below";
    case EPlacement::Interior: return "interior";
    case EPlacement::AboveAll: return "above";
    }
    return "?";
}

RationalPolynomial residual(const MixedRelation& r) { return r.a * r.p.poly - r.b * r.g.poly - r.h * r.q.poly; }

bool verify_identity(const MixedRelation& r) { return residual(r).is_zero(); }

std::vector<std::string> corollary_params(CorollaryId id) {
    switch (id) {
    case CorollaryId::Krawtchouk31: return {"p", "N"};
    case CorollaryId::Meixner32: return {"t", "w"};
    case CorollaryId::Narayana33:
    case CorollaryId::Narayana34: return {};
    case CorollaryId::Jacobi35:
    case CorollaryId::Jacobi36:
    case CorollaryId::JacobiRemark42: return {"alpha", "beta"};
    case CorollaryId::Laguerre37: return {"alpha"};
    }
    return {};
}

long corollary_min_n(CorollaryId id) {
    switch (id) {
    case CorollaryId::Narayana33:
    case CorollaryId::Narayana34: return 2;
    case CorollaryId::Jacobi36:
    case CorollaryId::JacobiRemark42: return 1;
    default: return 0;
    }
}

MixedRelation build_relation(CorollaryId id, long n, const ParamMap& params) {
    check_params(id, n, params);
    MixedRelation r;
    switch (id) {
    case CorollaryId::Krawtchouk31: r = build_krawtchouk(n, params); break;
    case CorollaryId::Meixner32: r = build_meixner(n, params); break;
    case CorollaryId::Narayana33: r = build_narayana33(n); break;
    case CorollaryId::Narayana34: r = build_narayana34(n); break;
    case CorollaryId::Jacobi35: r = build_jacobi35(n, params); break;
    case CorollaryId::Jacobi36: r = build_jacobi36(n, params); break;
    case CorollaryId::JacobiRemark42: r = build_jacobi42(n, params); break;
    case CorollaryId::Laguerre37: r = build_laguerre(n, params); break;
    }
    r.id = std::string(corollary_name(id));
    r.n = n;
    r.params = params;
    return finish(std::move(r));
}

MixedRelation build_relation(std::string_view id, long n, const ParamMap& params) {
    return build_relation(parse_corollary(id), n, params);
}

MixedRelation affine_transform(const MixedRelation& r, const Rational& scale, const Rational& shift) {
    require(scale > 0, "affine_transform: scale must be positive");
    const Rational inv = 1 / scale;
    const Rational inner_shift = -shift / scale;
    auto map_poly = [&](const RationalPolynomial& p, long power) {
        return compose_affine(p, inv, inner_shift) * pow(scale, power);
    };
    auto map_component = [&](const Component& c) {
        Component out = c;
        out.poly = map_poly(c.poly, c.poly.degree());
        for (auto& root : out.known_roots) root = scale * root + shift;
        if (c.recurrence) {
            for (auto& v : out.recurrence->c) v = scale * v + shift;
            for (auto& v : out.recurrence->lambda) v *= scale * scale;
        }
        return out;
    };
    auto map_point = [&](double x) { return std::isfinite(x) ? scale.get_d() * x + shift.get_d() : x; };

    MixedRelation out = r;
    const long m = r.q.poly.degree();
    out.p = map_component(r.p);
    out.g = map_component(r.g);
    out.q = map_component(r.q);
    out.a = map_poly(r.a, m + 1 - r.p.poly.degree());
    out.b = map_poly(r.b, m + 1 - r.g.poly.degree());
    out.e = scale * r.e + shift;
    out.h = r.sign() > 0 ? x_minus(out.e) : -x_minus(out.e);
    out.support_lo = map_point(r.support_lo);
    out.support_hi = map_point(r.support_hi);
    if (r.quotient_root) out.quotient_root = scale * *r.quotient_root + shift;
    out.tags["affine"] = "scale=" + to_string(scale) + ",shift=" + to_string(shift);
    return out;
}

ZeroSet component_zeros(const Component& c) {
    if (c.all_roots_known) {
        std::vector<double> v;
        for (const auto& root : c.known_roots) v.push_back(root.get_d());
        std::sort(v.begin(), v.end());
        ZeroSet zs;
        zs.zeros = Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
        zs.method = RootMethod::Companion;
        zs.source = c.label + " (exact roots)";
        return zs;
    }
    if (c.recurrence) return zeros_from_recurrence(*c.recurrence, c.label);
    return zeros_general(c.poly, c.label);
}

// CheckReport ---------------------------------------------------------------------------

std::string CheckReport::e_position() const {
    if (!e_slot || !zg) return "unknown";
    if (*e_slot == 0) return "BelowAll";
    if (*e_slot == zg->size()) return "AboveAll";
    return "Interior(" + std::to_string(*e_slot) + ")";
}

const Clause* CheckReport::find(std::string_view name) const {
    for (const auto& c : clauses)
        if (c.name == name) return &c;
    return nullptr;
}

ClauseStatus CheckReport::status_of(std::string_view name) const {
    const Clause* c = find(name);
    if (c == nullptr) throw std::out_of_range("no clause named " + std::string(name));
    return c->status;
}

bool CheckReport::hypotheses_hold() const {
    return std::none_of(clauses.begin(), clauses.end(), [](const Clause& c) {
        return c.name.rfind("hyp.", 0) == 0 && (c.status == ClauseStatus::Fail || c.status == ClauseStatus::Inconclusive);
    });
}

bool CheckReport::passed() const {
    return std::none_of(clauses.begin(), clauses.end(), [](const Clause& c) {
        return c.status == ClauseStatus::Fail || c.status == ClauseStatus::Inconclusive;
    });
}

std::size_t CheckReport::count(ClauseStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(clauses.begin(), clauses.end(), [s](const Clause& c) { return c.status == s; }));
}

// Theorem checkers -----------------------------------------------------------------------

CheckReport check_theorem1(const MixedRelation& r, double floor) {
    if (r.shape != RelationShape::Thm1) throw InvalidArgument("check_theorem1: relation is not of Thm1 shape");
    Work w = prelude(r, floor);
    const char* case1[] = {"case1.E_below_max_G", "case1.(x-E)P_prec_G", "case1.G_prec_P_iff_E_below_min_G"};
    const char* case2[] = {"case2.E_above_min_G", "case2.G_prec_(x-E)P", "case2.G_prec_P_iff_E_above_max_G"};
    auto skip_case = [&](const char* const* names, const std::string& why) {
        for (int i = 0; i < 3; ++i) w.add(skipped(names[i], why));
    };
    if (!w.zeros_ok) return w.rep;

    const bool q_first = w.zq()(0) < w.zg()(0);
    auto premise = q_first ? alternates(w.zq(), w.zg(), floor) : alternates(w.zg(), w.zq(), floor);
    w.rep.premise_verdict = premise;
    w.add(from_verdict(q_first ? "premise.Q_prec_G" : "premise.G_prec_Q", premise));
    if (!premise.holds() || w.degenerate) {
        const std::string why = w.degenerate ? "hypothesis violated: " + *w.rep.degeneracy : "premise failed";
        skip_case(case1, why);
        skip_case(case2, why);
        return w.rep;
    }

    const double gmin = w.zg().minCoeff(), gmax = w.zg().maxCoeff();
    const auto full = full_interlace(w.zp(), w.zg(), floor);
    if (q_first) {
        const auto side = below(w.e, gmax, floor);
        w.add(side ? make_clause(case1[0], *side, "E=" + num(w.e) + ", x_max=" + num(gmax))
                   : Clause{case1[0], ClauseStatus::Inconclusive, "E within floor of x_max"});
        if (auto v = try_added_point(w, case1[1])) {
            Clause c = from_verdict(case1[1], *v);
            if (v->holds() && v->orientation != Orientation::PBelowG) {
                c.status = ClauseStatus::Fail;
                c.detail += " (expected (x-E)P first)";
            }
            w.add(c);
        }
        w.add(iff_clause(case1[2], full, below(w.e, gmin, floor), "E<x_min"));
        skip_case(case2, "premise orientation is Q before G");
    } else {
        const auto side = below(gmin, w.e, floor);
        w.add(side ? make_clause(case2[0], *side, "E=" + num(w.e) + ", x_min=" + num(gmin))
                   : Clause{case2[0], ClauseStatus::Inconclusive, "E within floor of x_min"});
        if (auto v = try_added_point(w, case2[1])) {
            Clause c = from_verdict(case2[1], *v);
            if (v->holds() && v->orientation != Orientation::GBelowP) {
                c.status = ClauseStatus::Fail;
                c.detail += " (expected G first)";
            }
            w.add(c);
        }
        w.add(iff_clause(case2[2], full, below(gmax, w.e, floor), "E>x_max"));
        skip_case(case1, "premise orientation is G before Q");
    }
    return w.rep;
}

CheckReport check_theorem2star(const MixedRelation& r, double floor) {
    if (r.shape != RelationShape::Thm2star)
        throw InvalidArgument("check_theorem2star: relation is not of Thm2star shape");
    Work w = prelude(r, floor);
    const char* names[] = {"conclusion.(x-E)P_prec_G", "P_prec_G_when_E_above_max_G", "G_prec_P_when_E_below_min_G",
                           "full_iff_E_outside_G_range"};
    if (!w.zeros_ok) return w.rep;

    const auto premise = interlaces_down(w.zg(), w.zq(), floor);
    w.rep.premise_verdict = premise;
    w.add(from_verdict("premise.G_prec_Q", premise));

    if (r.quotient_root && w.exact_common_zero && *w.common_root == *r.quotient_root) {
        // common zero excluded by the theorem: test P against G / (x - root)
        for (auto& c : w.rep.clauses)
            if (c.name == "hyp.no_common_zeros_G_P" || c.name == "hyp.E_off_G_zeros") {
                c.status = ClauseStatus::Skipped;
                c.detail += "; theorem not applicable, quotient test instead";
            }
        const auto quotient = divide_exact(r.g.poly, *r.quotient_root);
        const auto zquot = zeros_general(quotient, "G/(x - " + to_string(*r.quotient_root) + ")");
        const auto v = interlaces_down(w.zp(), zquot.zeros, floor);
        w.rep.conclusion_verdict = v;
        w.add(from_verdict("quotient.P_prec_G_div_linear", v));
        for (const char* name : names) w.add(skipped(name, "common zero of G and P"));
        return w.rep;
    }
    if (!premise.holds() || w.degenerate) {
        const std::string why = w.degenerate ? "hypothesis violated: " + *w.rep.degeneracy : "premise failed";
        for (const char* name : names) w.add(skipped(name, why));
        return w.rep;
    }

    if (auto v = try_added_point(w, names[0])) w.add(from_verdict(names[0], *v));
    const double gmin = w.zg().minCoeff(), gmax = w.zg().maxCoeff();
    const auto full = full_interlace(w.zp(), w.zg(), floor);
    const auto above = below(gmax, w.e, floor);
    const auto under = below(w.e, gmin, floor);
    if (above && *above)
        w.add(make_clause(names[1], full.holds() && full.full_orientation == Orientation::PBelowG, full.describe()));
    else
        w.add(skipped(names[1], "E not above max zero of G"));
    if (under && *under)
        w.add(make_clause(names[2], full.holds() && full.full_orientation == Orientation::GBelowP, full.describe()));
    else
        w.add(skipped(names[2], "E not below min zero of G"));
    std::optional<bool> outside;
    if (above && under) outside = *above || *under;
    w.add(iff_clause(names[3], full, outside, "E outside [x_min,x_max]"));
    return w.rep;
}

namespace {

/// Occupancy of (a, x_1), (x_k, x_{k+1}), (x_n, b) by the zeros of P.
std::vector<int> occupancy(const Eigen::VectorXd& zp, const Eigen::VectorXd& zg) {
    std::vector<int> counts(static_cast<std::size_t>(zg.size() + 1), 0);
    for (Eigen::Index i = 0; i < zp.size(); ++i) ++counts[static_cast<std::size_t>(count_below(zg, zp(i)))];
    return counts;
}

/// Names the configuration of P's zeros among the proof's enumerated cases, or "unlisted".
std::string classify(const std::vector<int>& occ, Eigen::Index e_slot, const Eigen::VectorXd& zp, double e) {
    const auto slots = static_cast<Eigen::Index>(occ.size());  // n + 1
    const Eigen::Index n = slots - 1;
    auto gaps_one_except = [&](Eigen::Index skip1, Eigen::Index skip2) {
        for (Eigen::Index k = 1; k < n; ++k)
            if (k != skip1 && k != skip2 && occ[static_cast<std::size_t>(k)] != 1) return false;
        return true;
    };
    const int left = occ.front(), right = occ.back();
    if (e_slot == 0) return (left == 1 && right == 0 && gaps_one_except(-1, -1)) ? "below:one_left" : "unlisted";
    if (e_slot == n) return (left == 0 && right == 1 && gaps_one_except(-1, -1)) ? "above:one_right" : "unlisted";
    const Eigen::Index kp = e_slot;
    const int in_kp = occ[static_cast<std::size_t>(kp)];
    if (gaps_one_except(kp, -1)) {
        if (in_kp == 2 && left == 0 && right == 0) {
            Eigen::Index below_e = 0;
            for (Eigen::Index i = 0; i < zp.size(); ++i) below_e += zp(i) < e ? 1 : 0;
            // the two zeros in gap k' lie on opposite sides of E exactly when k' zeros precede E
            return below_e == kp ? "interior:straddle" : "interior:pair_in_gap";
        }
        if (in_kp == 0 && left == 2 && right == 0) return "interior:pair_left";
        if (in_kp == 0 && left == 0 && right == 2) return "interior:pair_right";
    }
    if (in_kp == 0 && left == 0 && right == 0) {
        for (Eigen::Index t = 1; t < n; ++t)
            if (t != kp && occ[static_cast<std::size_t>(t)] == 3 && gaps_one_except(kp, t)) return "interior:triple";
    }
    return "unlisted";
}

} // namespace

CheckReport check_theorem2(const MixedRelation& r, double floor) {
    if (r.shape != RelationShape::Thm2) throw InvalidArgument("check_theorem2: relation is not of Thm2 shape");
    Work w = prelude(r, floor);
    const char* names[] = {"gaps_with_P_zero_at_least_n-2", "configuration_enumerated",
                           "P_prec_G_when_E_below_min_G",   "G_prec_P_when_E_above_max_G",
                           "(x-E)G_prec_P_when_straddling", "at_most_one_extreme_side"};
    if (!w.zeros_ok) return w.rep;

    const auto premise = interlaces_down(w.zq(), w.zg(), floor);
    w.rep.premise_verdict = premise;
    w.add(from_verdict("premise.Q_prec_G", premise));
    if (!premise.holds() || w.degenerate) {
        const std::string why = w.degenerate ? "hypothesis violated: " + *w.rep.degeneracy : "premise failed";
        for (const char* name : names) w.add(skipped(name, why));
        return w.rep;
    }

    const auto occ = occupancy(w.zp(), w.zg());
    const long n = static_cast<long>(w.zg().size());
    int gaps_hit = 0;
    for (long k = 1; k < n; ++k) gaps_hit += occ[static_cast<std::size_t>(k)] > 0 ? 1 : 0;
    w.add(make_clause(names[0], gaps_hit >= n - 2,
                      std::to_string(gaps_hit) + " of " + std::to_string(std::max(n - 1, 0L)) + " gaps occupied"));

    w.rep.extreme_left = occ.front() > 0;
    w.rep.extreme_right = occ.back() > 0;
    const auto config = classify(occ, *w.rep.e_slot, w.zp(), w.e);
    w.rep.configuration = config;
    std::string occ_text = "occupancy [";
    for (std::size_t i = 0; i < occ.size(); ++i) occ_text += (i ? "," : "") + std::to_string(occ[i]);
    occ_text += "]";
    w.add(make_clause(names[1], config != "unlisted", config + ", " + occ_text));

    const double gmin = w.zg().minCoeff(), gmax = w.zg().maxCoeff();
    const auto full = full_interlace(w.zp(), w.zg(), floor);
    const auto under = below(w.e, gmin, floor);
    const auto above = below(gmax, w.e, floor);
    if (under && *under)
        w.add(make_clause(names[2], full.holds() && full.full_orientation == Orientation::PBelowG, full.describe()));
    else
        w.add(skipped(names[2], "E not below min zero of G"));
    if (above && *above)
        w.add(make_clause(names[3], full.holds() && full.full_orientation == Orientation::GBelowP, full.describe()));
    else
        w.add(skipped(names[3], "E not above max zero of G"));

    if (config == "interior:straddle") {
        Eigen::VectorXd merged(w.zg().size() + 1);
        merged.head(w.zg().size()) = w.zg();
        merged(w.zg().size()) = w.e;
        std::sort(merged.begin(), merged.end());
        const auto v = interlaces_down(merged, w.zp(), floor);
        w.rep.conclusion_verdict = v;
        w.add(from_verdict(names[4], v));
    } else {
        w.add(skipped(names[4], "configuration " + config));
    }
    w.add(make_clause(names[5], !(*w.rep.extreme_left && *w.rep.extreme_right),
                      "left=" + yes_no(*w.rep.extreme_left) + ", right=" + yes_no(*w.rep.extreme_right)));
    return w.rep;
}

CheckReport check_relation(const MixedRelation& r, double floor) {
    switch (r.shape) {
    case RelationShape::Thm1: return check_theorem1(r, floor);
    case RelationShape::Thm2star: return check_theorem2star(r, floor);
    case RelationShape::Thm2: return check_theorem2(r, floor);
    }
    throw InvalidArgument("unknown relation shape");
}

// Oracles ----------------------------------------------------------------------------------

namespace {

constexpr double kJitter = 0.01;
constexpr double kEMargin = 0.01;
constexpr long kGrid = 1000000;

class Draw {
public:
    Draw(std::uint64_t seed, long n, int kind) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(kind)};
        engine_.seed(seq);
    }
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    bool coin() { return (engine_() >> 63) != 0; }
    long index(long count) { return static_cast<long>(uniform() * static_cast<double>(count)) % count; }

private:
    std::mt19937_64 engine_;
};

Rational on_grid(double v) { return make_rational(std::lround(v * kGrid), kGrid); }

/// m uniformly spaced points in (-1, 1), jittered, as rationals on the 1e-6 grid.
std::vector<Rational> spaced_points(Draw& d, long m) {
    std::vector<Rational> out;
    for (long i = 0; i < m; ++i) {
        const double base = -1.0 + (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(m);
        out.push_back(on_grid(base + d.uniform(-kJitter, kJitter)));
    }
    return out;
}

void split(const std::vector<Rational>& pts, std::vector<Rational>& even, std::vector<Rational>& odd) {
    for (std::size_t i = 0; i < pts.size(); ++i) (i % 2 == 0 ? even : odd).push_back(pts[i]);
}

Rational place_e(Draw& d, EPlacement placement, const std::vector<Rational>& g) {
    std::vector<double> gz;
    for (const auto& v : g) gz.push_back(v.get_d());
    const double lo = gz.front(), hi = gz.back();
    switch (placement) {
    case EPlacement::BelowAll: return on_grid(d.uniform(lo - 0.5, lo - kEMargin));
    case EPlacement::AboveAll: return on_grid(d.uniform(hi + kEMargin, hi + 0.5));
    case EPlacement::Interior: {
        if (gz.size() < 2) throw InvalidArgument("interior placement needs at least two zeros of G");
        const auto k = static_cast<std::size_t>(d.index(static_cast<long>(gz.size()) - 1));
        return on_grid(d.uniform(gz[k] + kEMargin, gz[k + 1] - kEMargin));
    }
    case EPlacement::Any:
        break;
    }
    for (;;) {
        const double e = d.uniform(-1.3, 1.3);
        if (std::all_of(gz.begin(), gz.end(), [e](double z) { return std::abs(e - z) >= kEMargin; })) return on_grid(e);
    }
}

std::string oracle_id(const char* kind) { return std::string("oracle-") + kind; }

void stamp(MixedRelation& r, const char* kind, long n, std::uint64_t seed, const OracleOptions& opt, int attempt) {
    r.id = oracle_id(kind);
    r.n = n;
    r.params["seed"] = Rational(static_cast<unsigned long>(seed));
    r.tags["placement"] = std::string(placement_name(opt.placement));
    r.tags["attempts"] = std::to_string(attempt + 1);
}

} // namespace

MixedRelation oracle_theorem1(long n, std::uint64_t seed, const OracleOptions& opt) {
    require(n >= 1, "oracle_theorem1: n >= 1 required");
    Draw d(seed, n, 1);
    OracleOptions o = opt;
    if (o.force_impossible) {
        o.orientation = PremiseOrientation::QBelowG;
        o.placement = EPlacement::AboveAll;
    }
    for (int attempt = 0; attempt < o.max_retries; ++attempt) {
        const auto orient = o.orientation ? *o.orientation
                                          : (d.coin() ? PremiseOrientation::QBelowG : PremiseOrientation::GBelowQ);
        std::vector<Rational> even, odd;
        split(spaced_points(d, 2 * (n + 1)), even, odd);
        const auto& qz = orient == PremiseOrientation::QBelowG ? even : odd;
        const auto& gz = orient == PremiseOrientation::QBelowG ? odd : even;
        const Rational e = place_e(d, o.placement, gz);

        MixedRelation r;
        r.shape = RelationShape::Thm1;
        r.g = roots_component(gz, "G");
        r.q = roots_component(qz, "Q");
        const Rational b0 = r.g.poly.coeff(static_cast<std::size_t>(n)) - r.q.poly.coeff(static_cast<std::size_t>(n)) + e;
        r.b = linear(b0, Rational(-1));
        r.e = e;
        r.h = x_minus(e);
        if (eval(r.b, e) == 0) continue;
        const RationalPolynomial combo = r.b * r.g.poly + r.h * r.q.poly;
        if (combo.degree() != n) continue;
        const Rational a = combo.leading();
        if (a < 0 && !o.force_impossible) continue;
        if (a == 0) continue;
        r.a = RationalPolynomial::constant(a);
        r.p = polynomial_component(combo / a, "P");
        stamp(r, "thm1", n, seed, o, attempt);
        r.tags["orientation"] = orient == PremiseOrientation::QBelowG ? "Q_below_G" : "G_below_Q";
        if (o.force_impossible) r.tags["forced"] = "E_above_max_G";
        return finish(std::move(r));
    }
    throw OracleError("oracle_theorem1: no admissible draw after " + std::to_string(o.max_retries) + " attempts");
}

MixedRelation oracle_theorem2star(long n, std::uint64_t seed, const OracleOptions& opt) {
    require(n >= 1, "oracle_theorem2star: n >= 1 required");
    Draw d(seed, n, 2);
    for (int attempt = 0; attempt < opt.max_retries; ++attempt) {
        std::vector<Rational> even, odd;
        split(spaced_points(d, 2 * n - 1), even, odd);
        const Rational e = place_e(d, opt.placement, even);
        const Rational bconst = on_grid(d.uniform(0.1, 3.0));
        const Rational a = bconst - 1;
        if (a <= 0) continue;

        MixedRelation r;
        r.shape = RelationShape::Thm2star;
        r.g = roots_component(even, "G");
        r.q = roots_component(odd, "Q");
        r.e = e;
        r.h = -x_minus(e);
        r.b = RationalPolynomial::constant(bconst);
        r.a = RationalPolynomial::constant(a);
        const RationalPolynomial combo = r.b * r.g.poly + r.h * r.q.poly;
        r.p = polynomial_component(combo / a, "P");
        stamp(r, "thm2star", n, seed, opt, attempt);
        return finish(std::move(r));
    }
    throw OracleError("oracle_theorem2star: no admissible draw after " + std::to_string(opt.max_retries) + " attempts");
}

MixedRelation oracle_theorem2(long n, std::uint64_t seed, const OracleOptions& opt) {
    require(n >= 1, "oracle_theorem2: n >= 1 required");
    Draw d(seed, n, 3);
    for (int attempt = 0; attempt < opt.max_retries; ++attempt) {
        std::vector<Rational> even, odd;
        split(spaced_points(d, 2 * n + 1), even, odd);
        const Rational e = place_e(d, opt.placement, odd);
        const Rational a = on_grid(d.uniform(0.2, 3.0));

        MixedRelation r;
        r.shape = RelationShape::Thm2;
        r.g = roots_component(odd, "G");
        r.q = roots_component(even, "Q");
        const auto un = static_cast<std::size_t>(n);
        const Rational g1 = r.g.poly.coeff(un - 1), g2 = n >= 2 ? r.g.poly.coeff(un - 2) : Rational(0);
        const Rational q1 = r.q.poly.coeff(un), q2 = r.q.poly.coeff(un - 1);
        const Rational b1 = q1 - e - g1;
        const Rational b0 = a - g2 - b1 * g1 + q2 - e * q1;
        r.b = RationalPolynomial{b0, b1, Rational(1)};
        r.e = e;
        r.h = -x_minus(e);
        r.a = RationalPolynomial::constant(a);
        if (eval(r.b, e) == 0) continue;
        const RationalPolynomial combo = r.b * r.g.poly + r.h * r.q.poly;
        if (combo.degree() != n || combo.leading() != a) throw std::logic_error("oracle_theorem2: degree cancellation failed");
        r.p = polynomial_component(combo / a, "P");
        try {
            (void)zeros_general(r.p.poly);
        } catch (const RootFindError&) {
            continue;
        }
        stamp(r, "thm2", n, seed, opt, attempt);
        return finish(std::move(r));
    }
    throw OracleError("oracle_theorem2: no admissible draw after " + std::to_string(opt.max_retries) + " attempts");
}

} // namespace interlace
