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

#include "interlace/cli.hpp"
#include "interlace/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace interlace;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("polynomial JSON round trip") {
    const RationalPolynomial p{make_rational(1, 3), Rational(-2), Rational(1)};
    const Json j = to_json(p);
    CHECK(j.dump() == R"({"mode":"rational","coeffs":["1/3","-2","1"]})");
    CHECK(rational_polynomial_from_json(j) == p);
    const FloatPolynomial f{0.5, 1.0};
    CHECK(float_polynomial_from_json(to_json(f)) == f);
    CHECK_THROWS_AS((void)float_polynomial_from_json(j), InvalidArgument);
    CHECK_THROWS_AS((void)rational_polynomial_from_json(to_json(f)), InvalidArgument);
}

TEST_CASE("family spec JSON") {
    const auto spec = FamilySpec::krawtchouk(make_rational(1, 2), 4, 2);
    const auto back = family_spec_from_json(to_json(spec));
    CHECK(describe(back) == describe(spec));
    CHECK_THROWS_AS((void)family_spec_from_json(Json::parse(R"({"kind":"krawtchouk","params":{"p":"1/2","N":"4"},"n":5})")),
                    InvalidArgument);
}

TEST_CASE("formatting helpers") {
    CHECK(format_double(-0.2035653, 6) == "-0.203565");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(format_params({{"alpha", Rational(2)}, {"beta", make_rational(1, 2)}}) == "alpha=2;beta=1/2");
    const auto rep = check_relation(build_relation(CorollaryId::Laguerre37, 2, {{"alpha", Rational(0)}}));
    const auto rows = csv_rows(rep);
    CHECK(rows.size() == rep.clauses.size());
    CHECK(rows.front().rfind("laguerre-3.7,2,alpha=0,identity,pass", 0) == 0);
    const Json j = to_json(rep);
    CHECK(j.at("E").get<std::string>() == "3");
    CHECK(j.at("passed").get<bool>());
}

TEST_CASE("cli poly") {
    auto r = run({"poly", "--family", "narayana-reduced", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"mode\":\"rational\",\"coeffs\":[\"1\",\"3\",\"1\"]}\n");
    r = run({"poly", "--family", "laguerre", "--alpha", "0", "--n", "1"});
    CHECK(r.out == "{\"mode\":\"rational\",\"coeffs\":[\"-1\",\"1\"]}\n");
    r = run({"poly", "--family", "krawtchouk", "--p", "1/2", "--N", "4", "--n", "5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("n") != std::string::npos);
    CHECK(run({"poly", "--family", "laguerre", "--alpha", "0", "--beta", "1", "--n", "1"}).code == 2);
    CHECK(run({"poly", "--family", "laguerre", "--alpha", "x", "--n", "1"}).code == 2);
    CHECK(run({"poly", "--family", "laguerre", "--alpha", "1", "--n", "2", "--float"}).out ==
          "{\"mode\":\"float\",\"coeffs\":[6.0,-6.0,1.0]}\n");
}

TEST_CASE("cli zeros") {
    auto r = run({"zeros", "--family", "jacobi", "--alpha", "2", "--beta", "14", "--n", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[-0.203565,0.101387,0.369625,0.59992,0.785274,0.918787]") != std::string::npos);
    r = run({"zeros", "--family", "narayana-reduced", "--n", "2"});
    CHECK(r.out.find("\"zeros\":[-1]") != std::string::npos);
    r = run({"zeros", "--family", "jacobi", "--alpha", "15", "--beta", "3", "--n", "7", "--plot-data"});
    CHECK(r.out.rfind("x,family\n-0.906419,", 0) == 0);
    r = run({"zeros", "--family", "laguerre", "--alpha", "0", "--n", "1", "--digits", "3"});
    CHECK(r.out.find("\"zeros\":[1]") != std::string::npos);
}

TEST_CASE("cli check") {
    auto r = run({"check", "jacobi-3.6", "--n", "6", "--alpha", "2", "--beta", "14"});
    CHECK(r.code == 0);
    CHECK(r.out.find("-2/5") != std::string::npos);
    r = run({"check", "laguerre-3.7", "--n", "4", "--alpha", "0", "--json"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("passed").get<bool>());
    CHECK(j.at("zeros").at("G").at("zeros").back().get<double>() > 5.0);
    r = run({"check", "narayana-3.4", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("quotient.P_prec_G_div_linear") != std::string::npos);
    CHECK(run({"check", "jacobi-3.6", "--n", "3", "--alpha", "1", "--beta", "1"}).code == 1);
    CHECK(run({"check", "jacobi-3.6", "--n", "3", "--alpha", "1"}).code == 2);
    CHECK(run({"check", "nope", "--n", "3"}).code == 2);
}

TEST_CASE("cli table2") {
    const auto r = run({"table2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1,6,2,14,1,-0.203565,-0.212298,") != std::string::npos);
    CHECK(r.out.find("2,7,14,2,7,0.296953,0.300166,") != std::string::npos);
    CHECK(r.out.find("1,true,false,true,false,true") != std::string::npos);
    CHECK(r.out.find("1,-2/5,-0.4,true") != std::string::npos);
    CHECK(r.out.find("2,3/8,0.375,true") != std::string::npos);
}

TEST_CASE("cli sweep") {
    auto r = run({"sweep", "--oracle", "thm1", "--n", "1..8", "--seeds", "100"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# summary points=800 ") != std::string::npos);
    CHECK(r.out.find("failing_points=0") != std::string::npos);

    // serial and parallel runs produce identical output
    const auto one = run({"sweep", "--oracle", "thm2star", "--n", "1..4", "--seeds", "20", "--jobs", "1"});
    const auto four = run({"sweep", "--oracle", "thm2star", "--n", "1..4", "--seeds", "20", "--jobs", "4"});
    CHECK(one.out == four.out);

    const auto dir = std::filesystem::temp_directory_path();
    const auto spec_path = (dir / "interlace_sweep_test.json").string();
    const auto out_path = (dir / "interlace_sweep_test.csv").string();
    {
        std::ofstream f(spec_path);
        f << R"({"relation": "krawtchouk-3.1", "n": {"from": 1, "to": 3},
                 "params": {"N": [2, 3], "p": {"from": "1/4", "to": "3/4", "step": "1/4"}}})";
    }
    r = run({"sweep", spec_path, "--output", out_path});
    CHECK(r.out.find("# summary points=18 ") == 0);
    CHECK(r.out.find("invalid=3") != std::string::npos);
    std::ifstream csv(out_path);
    std::string header;
    std::getline(csv, header);
    CHECK(header == kCsvHeader);

    {
        std::ofstream f(spec_path);
        f << R"({"relation": "krawtchouk-3.1", "n": 2, "bogus": 1})";
    }
    CHECK(run({"sweep", spec_path}).code == 2);
    {
        std::ofstream f(spec_path);
        f << "{not json";
    }
    CHECK(run({"sweep", spec_path}).code == 2);
    CHECK(run({"sweep", "--oracle", "thm9", "--n", "1..2", "--seeds", "1"}).code == 2);
    CHECK(run({"sweep", "--oracle", "thm1", "--n", "3..1", "--seeds", "1"}).code == 2);
    std::filesystem::remove(spec_path);
    std::filesystem::remove(out_path);
}

TEST_CASE("sweep spec parsing") {
    const auto spec = sweep_spec_from_json(Json::parse(
        R"({"relation":"jacobi-3.6","n":[1,2],"params":{"alpha":[0,"1/2"],"beta":{"from":0,"to":1}}})"));
    const auto points = expand(spec);
    CHECK(points.size() == 2 * 2 * 2);
    CHECK(points.front().n == 1);
    CHECK(points.back().n == 2);
    CHECK(parse_range("1..3") == std::vector<long>{1, 2, 3});
    CHECK(parse_range("4") == std::vector<long>{4});
    CHECK_THROWS_AS((void)parse_range("a..b"), InvalidArgument);
}

TEST_CASE("cli usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
