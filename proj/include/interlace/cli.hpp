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
 * @file cli.hpp
 * @brief The `interlace` command line, callable in-process for testing.
 *
 * Commands: poly, zeros, check, table2, sweep. Exit codes: 0 all clauses pass,
 * 1 a clause failed (or a golden comparison mismatched), 2 invalid input.
 */
#ifndef INTERLACE_CLI_HPP
#define INTERLACE_CLI_HPP

#include "interlace/io.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace interlace {

inline constexpr int kExitPass = 0;
inline constexpr int kExitClauseFailure = 1;
inline constexpr int kExitInputError = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience for tests: argv[0] is supplied.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One block of the Jacobi zero comparison table: zeros of P^{(a,b)}_n and P^{(a+1,b+1)}_n.
struct Table2Block {
    long n;
    long alpha;
    long beta;
    std::vector<double> x_printed;
    std::vector<double> z_printed;
    std::string e_printed;
    bool left_printed;
    bool right_printed;
};

/// Golden Jacobi blocks, 6 significant digits.
const std::vector<Table2Block>& table2_blocks();

/// Grid point of a sweep: relation or oracle instance.
struct SweepPoint {
    std::string relation;  // corollary id or "oracle-thm1" ...
    long n = 0;
    ParamMap params;
    std::uint64_t seed = 0;
};

struct SweepSpec {
    std::string relation;  // corollary id, empty for oracle sweeps
    std::string oracle;    // "thm1", "thm2star", "thm2"
    std::vector<long> ns;
    std::map<std::string, std::vector<Rational>> grid;
    std::uint64_t seeds = 0;
    EPlacement placement = EPlacement::Any;
    std::string output;
    std::string format = "csv";
    unsigned workers = 0;  // 0: hardware concurrency
};

/// Throws InvalidArgument on malformed input.
SweepSpec sweep_spec_from_json(const Json& j);

/// Lexicographic order: n outermost, then parameters by name.
std::vector<SweepPoint> expand(const SweepSpec& spec);

/// "1..8" or "3".
std::vector<long> parse_range(const std::string& text);

} // namespace interlace

#endif
