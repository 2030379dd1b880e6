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

#include "interlace/io.hpp"

#include <cstdio>

namespace interlace {

std::string format_double(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

Json to_json(const RationalPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    return Json{{"mode", "rational"}, {"coeffs", coeffs}};
}

Json to_json(const FloatPolynomial& p) {
    Json coeffs = Json::array();
    for (double c : p.coeffs()) coeffs.push_back(c);
    return Json{{"mode", "float"}, {"coeffs", coeffs}};
}

namespace {

void expect_mode(const Json& j, const char* mode) {
    if (!j.is_object() || !j.contains("mode") || !j.contains("coeffs"))
        throw InvalidArgument("polynomial JSON needs \"mode\" and \"coeffs\"");
    const auto got = j.at("mode").get<std::string>();
    if (got != mode) throw InvalidArgument("mode mismatch: expected " + std::string(mode) + ", got " + got);
}

Rational rational_from_json(const Json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw InvalidArgument("rational values must be strings (\"p/q\") or integers");
}

} // namespace

RationalPolynomial rational_polynomial_from_json(const Json& j) {
    expect_mode(j, "rational");
    std::vector<Rational> c;
    for (const auto& v : j.at("coeffs")) c.push_back(rational_from_json(v));
    return RationalPolynomial(std::move(c));
}

FloatPolynomial float_polynomial_from_json(const Json& j) {
    expect_mode(j, "float");
    return FloatPolynomial(j.at("coeffs").get<std::vector<double>>());
}

Json to_json(const ParamMap& params) {
    Json out = Json::object();
    for (const auto& [name, value] : params) out[name] = to_string(value);
    return out;
}

ParamMap params_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidArgument("params must be an object");
    ParamMap out;
    for (const auto& [name, value] : j.items()) out[name] = rational_from_json(value);
    return out;
}

Json to_json(const FamilySpec& spec) {
    return Json{{"kind", std::string(kind_name(spec.kind))}, {"params", to_json(spec.params)}, {"n", spec.n}};
}

FamilySpec family_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("n"))
        throw InvalidArgument("family spec JSON needs \"kind\" and \"n\"");
    FamilySpec spec;
    spec.kind = parse_kind(j.at("kind").get<std::string>());
    spec.n = j.at("n").get<long>();
    if (j.contains("params")) spec.params = params_from_json(j.at("params"));
    validate(spec);
    return spec;
}

Json to_json(const ZeroSet& zs, int digits) {
    Json zeros = Json::array();
    for (Eigen::Index i = 0; i < zs.size(); ++i) zeros.push_back(Json::parse(format_double(zs.zeros(i), digits)));
    return Json{{"zeros", zeros},
                {"bound", zs.bound},
                {"method", std::string(method_name(zs.method))},
                {"source", zs.source}};
}

Json to_json(const InterlacingVerdict& v) {
    Json out{{"kind", std::string(verdict_name(v.kind))}};
    out["E"] = v.e_used ? Json(*v.e_used) : Json(nullptr);
    out["witness"] = v.witness ? Json::array({v.witness->first, v.witness->second}) : Json(nullptr);
    out["gap"] = v.gap ? Json(*v.gap) : Json(nullptr);
    out["orientation"] = v.orientation ? Json(std::string(orientation_name(*v.orientation))) : Json(nullptr);
    if (v.e_slot) out["E_slot"] = *v.e_slot;
    out["full_orientation"] =
        v.full_orientation ? Json(std::string(orientation_name(*v.full_orientation))) : Json(nullptr);
    out["floor"] = v.floor;
    return out;
}

Json to_json(const CheckReport& report, int digits) {
    Json out;
    out["relation"] = report.relation_id;
    out["n"] = report.n;
    out["params"] = to_json(report.params);
    if (!report.tags.empty()) {
        Json tags = Json::object();
        for (const auto& [k, v] : report.tags) tags[k] = v;
        out["tags"] = tags;
    }
    out["shape"] = std::string(shape_name(report.shape));
    out["E"] = to_string(report.e);
    out["E_float"] = report.e.get_d();
    out["E_position"] = report.e_position();
    out["identity_ok"] = report.identity_ok;
    out["floor"] = report.floor;
    out["premise_verdict"] = report.premise_verdict ? to_json(*report.premise_verdict) : Json(nullptr);
    out["conclusion_verdict"] = report.conclusion_verdict ? to_json(*report.conclusion_verdict) : Json(nullptr);
    Json clauses = Json::object();
    for (const auto& c : report.clauses)
        clauses[c.name] = Json{{"status", std::string(status_name(c.status))}, {"detail", c.detail}};
    out["clauses"] = clauses;
    if (report.configuration) out["configuration"] = *report.configuration;
    if (report.extreme_left) out["extreme_left"] = *report.extreme_left;
    if (report.extreme_right) out["extreme_right"] = *report.extreme_right;
    if (report.degeneracy) out["degeneracy"] = *report.degeneracy;
    out["notes"] = report.notes;
    Json zeros = Json::object();
    if (report.zp) zeros["P"] = to_json(*report.zp, digits);
    if (report.zg) zeros["G"] = to_json(*report.zg, digits);
    if (report.zq) zeros["Q"] = to_json(*report.zq, digits);
    out["zeros"] = zeros;
    out["passed"] = report.passed();
    return out;
}

std::string format_params(const ParamMap& params) {
    std::string out;
    for (const auto& [name, value] : params) {
        if (!out.empty()) out += ";";
        out += name + "=" + to_string(value);
    }
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> csv_rows(const CheckReport& report) {
    std::vector<std::string> rows;
    const std::string prefix =
        csv_escape(report.relation_id) + "," + std::to_string(report.n) + "," + csv_escape(format_params(report.params)) + ",";
    for (const auto& c : report.clauses)
        rows.push_back(prefix + csv_escape(c.name) + "," + std::string(status_name(c.status)) + "," + csv_escape(c.detail));
    return rows;
}

} // namespace interlace
