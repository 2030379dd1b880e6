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
 * @file io.hpp
 * @brief JSON and CSV forms of polynomials, family specs, zero sets, verdicts and reports.
 */
#ifndef INTERLACE_IO_HPP
#define INTERLACE_IO_HPP

#include "interlace/families.hpp"
#include "interlace/interlacing.hpp"
#include "interlace/relations.hpp"
#include "interlace/rootfind.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace interlace {

using Json = nlohmann::ordered_json;

/// printf "%.*g"; fixed formatting keeps output byte-identical across runs.
std::string format_double(double v, int digits);

Json to_json(const RationalPolynomial& p);
Json to_json(const FloatPolynomial& p);
/// Throws InvalidArgument when "mode" is not "rational".
RationalPolynomial rational_polynomial_from_json(const Json& j);
/// Throws InvalidArgument when "mode" is not "float".
FloatPolynomial float_polynomial_from_json(const Json& j);

Json to_json(const ParamMap& params);
ParamMap params_from_json(const Json& j);

Json to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const Json& j);

Json to_json(const ZeroSet& zs, int digits = 17);
Json to_json(const InterlacingVerdict& v);
Json to_json(const CheckReport& report, int digits = 17);

/// "alpha=2;beta=14".
std::string format_params(const ParamMap& params);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_escape(const std::string& field);

inline constexpr const char* kCsvHeader = "relation,n,params,clause,status,detail";

/// One row per clause.
std::vector<std::string> csv_rows(const CheckReport& report);

} // namespace interlace

#endif
