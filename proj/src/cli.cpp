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

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace interlace {

namespace {

constexpr double kGoldenTolerance = 1e-5;

struct FamilyArgs {
    std::string family;
    long n = -1;
    std::map<std::string, std::string> raw;  // flag name -> text, only for flags given
};

const char* const kParamFlags[] = {"alpha", "beta", "p", "N", "t", "w"};

void add_param_flags(CLI::App* cmd, FamilyArgs& args) {
    for (const char* name : kParamFlags) {
        cmd->add_option_function<std::string>(
            std::string("--") + name, [&args, name](const std::string& v) { args.raw[name] = v; },
            std::string("parameter ") + name + " (integer, p/q or exact decimal)");
    }
}

std::vector<std::string> family_param_names(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::Jacobi: return {"alpha", "beta"};
    case FamilyKind::Laguerre: return {"alpha"};
    case FamilyKind::Krawtchouk: return {"p", "N"};
    case FamilyKind::Meixner: return {"t", "w"};
    default: return {};
    }
}

ParamMap collect(const std::map<std::string, std::string>& raw, const std::vector<std::string>& expected,
                 const std::string& who) {
    ParamMap params;
    for (const auto& name : expected) {
        const auto it = raw.find(name);
        if (it == raw.end()) throw InvalidArgument(who + ": missing --" + name);
        params[name] = parse_rational(it->second);
    }
    for (const auto& [name, value] : raw)
        if (std::find(expected.begin(), expected.end(), name) == expected.end())
            throw InvalidArgument(who + ": --" + name + " does not apply");
    return params;
}

FamilySpec spec_from_args(const FamilyArgs& args) {
    FamilySpec spec;
    spec.kind = parse_kind(args.family);
    if (args.n < 0) throw InvalidArgument("--n must be >= 0");
    spec.n = args.n;
    spec.params = collect(args.raw, family_param_names(spec.kind), args.family);
    validate(spec);
    return spec;
}

double separation_floor() {
    const char* env = std::getenv("INTERLACE_FLOOR");
    if (env == nullptr || *env == '\0') return kDefaultSeparationFloor;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0) || !std::isfinite(v))
        throw InvalidArgument(std::string("INTERLACE_FLOOR must be a positive number, got '") + env + "'");
    return v;
}

// check ---------------------------------------------------------------------------

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

void print_report(const CheckReport& rep, std::ostream& out) {
    out << "relation  " << rep.relation_id << "  n=" << rep.n;
    if (!rep.params.empty()) out << "  " << format_params(rep.params);
    out << "\n";
    out << "E         " << to_string(rep.e) << " (" << format_double(rep.e.get_d(), 10) << ")  position "
        << rep.e_position() << "\n";
    if (rep.zg && rep.zg->size() > 0)
        out << "zeros G   min " << format_double(rep.zg->min(), 10) << "  max " << format_double(rep.zg->max(), 10)
            << "\n";
    if (rep.configuration) out << "config    " << *rep.configuration << "\n";
    if (rep.degeneracy) out << "degenerate " << *rep.degeneracy << "\n";
    std::size_t width = 6;
    for (const auto& c : rep.clauses) width = std::max(width, c.name.size());
    out << "\n" << pad("clause", width + 2) << pad("status", 14) << "detail\n";
    for (const auto& c : rep.clauses)
        out << pad(c.name, width + 2) << pad(std::string(status_name(c.status)), 14) << c.detail << "\n";
    for (const auto& note : rep.notes) out << "note: " << note << "\n";
    out << "\nresult: " << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.count(ClauseStatus::Pass) << " pass, "
        << rep.count(ClauseStatus::Skipped) << " skipped, " << rep.count(ClauseStatus::Fail) << " fail, "
        << rep.count(ClauseStatus::Inconclusive) << " inconclusive)\n";
}

// table2 --------------------------------------------------------------------------

int cmd_table2(int digits, std::ostream& out, double floor) {
    bool all_ok = true;
    out << "block,n,alpha,beta,k,x,z,x_printed,z_printed,ok\n";
    std::vector<std::string> occupancy_rows;
    std::vector<std::string> e_rows;
    int block_index = 0;
    for (const auto& block : table2_blocks()) {
        ++block_index;
        const ParamMap params{{"alpha", Rational(block.alpha)}, {"beta", Rational(block.beta)}};
        const auto rep = check_relation(build_relation(CorollaryId::JacobiRemark42, block.n, params), floor);
        const auto& x = rep.zg->zeros;
        const auto& z = rep.zp->zeros;
        for (long k = 0; k < block.n; ++k) {
            const double xd = x(k), zd = z(k);
            const bool ok = std::abs(xd - block.x_printed[static_cast<std::size_t>(k)]) <= kGoldenTolerance &&
                            std::abs(zd - block.z_printed[static_cast<std::size_t>(k)]) <= kGoldenTolerance;
            all_ok = all_ok && ok;
            out << block_index << "," << block.n << "," << block.alpha << "," << block.beta << "," << k + 1 << ","
                << format_double(xd, digits) << "," << format_double(zd, digits) << ","
                << format_double(block.x_printed[static_cast<std::size_t>(k)], 6) << ","
                << format_double(block.z_printed[static_cast<std::size_t>(k)], 6) << "," << (ok ? "true" : "false")
                << "\n";
        }
        const bool e_ok = rep.e == parse_rational(block.e_printed);
        all_ok = all_ok && e_ok;
        e_rows.push_back(std::to_string(block_index) + "," + to_string(rep.e) + "," + block.e_printed + "," +
                         (e_ok ? "true" : "false"));
        const bool left = rep.extreme_left.value_or(false), right = rep.extreme_right.value_or(false);
        const bool occ_ok = left == block.left_printed && right == block.right_printed && left != right;
        all_ok = all_ok && occ_ok;
        auto b = [](bool v) { return std::string(v ? "true" : "false"); };
        occupancy_rows.push_back(std::to_string(block_index) + "," + b(left) + "," + b(right) + "," +
                                 b(block.left_printed) + "," + b(block.right_printed) + "," + b(occ_ok));
    }
    out << "\nblock,E,E_printed,ok\n";
    for (const auto& row : e_rows) out << row << "\n";
    out << "\nblock,left_occupied,right_occupied,left_printed,right_printed,ok\n";
    for (const auto& row : occupancy_rows) out << row << "\n";
    out << "# golden " << (all_ok ? "match" : "MISMATCH") << " (tolerance 1e-05)\n";
    return all_ok ? kExitPass : kExitClauseFailure;
}

// sweep ---------------------------------------------------------------------------

struct PointResult {
    std::optional<CheckReport> report;
    std::string invalid;  // input rejected for this grid point
    std::string error;    // unexpected failure
};

PointResult evaluate(const SweepSpec& spec, const SweepPoint& pt, double floor) {
    PointResult r;
    try {
        MixedRelation rel;
        if (!spec.oracle.empty()) {
            OracleOptions opt;
            opt.placement = spec.placement;
            if (spec.oracle == "thm1")
                rel = oracle_theorem1(pt.n, pt.seed, opt);
            else if (spec.oracle == "thm2star")
                rel = oracle_theorem2star(pt.n, pt.seed, opt);
            else
                rel = oracle_theorem2(pt.n, pt.seed, opt);
        } else {
            rel = build_relation(spec.relation, pt.n, pt.params);
        }
        r.report = check_relation(rel, floor);
    } catch (const InvalidArgument& ex) {
        r.invalid = ex.what();
    } catch (const std::exception& ex) {
        r.error = ex.what();
    }
    return r;
}

std::vector<PointResult> run_pool(const SweepSpec& spec, const std::vector<SweepPoint>& points, double floor) {
    std::vector<PointResult> results(points.size());
    unsigned workers = spec.workers != 0 ? spec.workers : std::max(1U, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(points.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) results[i] = evaluate(spec, points[i], floor);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return results;
}

struct SweepSummary {
    std::size_t points = 0, clauses = 0, pass = 0, fail = 0, skipped = 0, inconclusive = 0;
    std::size_t invalid = 0, errors = 0, degenerate = 0, failing_points = 0;

    [[nodiscard]] std::string line() const {
        std::ostringstream s;
        s << "# summary points=" << points << " clauses=" << clauses << " pass=" << pass << " fail=" << fail
          << " skipped=" << skipped << " inconclusive=" << inconclusive << " invalid=" << invalid
          << " errors=" << errors << " degenerate=" << degenerate << " failing_points=" << failing_points;
        return s.str();
    }
};

int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err, double floor) {
    const auto points = expand(spec);
    const auto results = run_pool(spec, points, floor);

    SweepSummary sum;
    std::ostringstream body;
    Json json_points = Json::array();
    const bool csv = spec.format == "csv";
    if (csv) body << kCsvHeader << "\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& pt = points[i];
        const auto& res = results[i];
        ++sum.points;
        ParamMap shown = pt.params;
        if (!spec.oracle.empty()) shown["seed"] = Rational(static_cast<unsigned long>(pt.seed));
        if (res.report) {
            const auto& rep = *res.report;
            sum.clauses += rep.clauses.size();
            sum.pass += rep.count(ClauseStatus::Pass);
            sum.fail += rep.count(ClauseStatus::Fail);
            sum.skipped += rep.count(ClauseStatus::Skipped);
            sum.inconclusive += rep.count(ClauseStatus::Inconclusive);
            if (rep.degeneracy)
                ++sum.degenerate;
            else if (!rep.passed())
                ++sum.failing_points;
            if (csv)
                for (const auto& row : csv_rows(rep)) body << row << "\n";
            else
                json_points.push_back(to_json(rep));
            continue;
        }
        const bool invalid = !res.invalid.empty();
        (invalid ? sum.invalid : sum.errors) += 1;
        if (!invalid) ++sum.failing_points;
        const std::string message = invalid ? res.invalid : res.error;
        if (csv) {
            body << csv_escape(pt.relation) << "," << pt.n << "," << csv_escape(format_params(shown)) << ",input,"
                 << (invalid ? "invalid" : "error") << "," << csv_escape(message) << "\n";
        } else {
            json_points.push_back(Json{{"relation", pt.relation},
                                       {"n", pt.n},
                                       {"params", to_json(shown)},
                                       {"status", invalid ? "invalid" : "error"},
                                       {"detail", message}});
        }
    }

    std::string text;
    if (csv) {
        body << sum.line() << "\n";
        text = body.str();
    } else {
        Json doc{{"points", json_points}, {"summary", sum.line().substr(2)}};
        text = doc.dump(2) + "\n";
    }
    if (spec.output.empty() || spec.output == "-") {
        out << text;
    } else {
        std::ofstream file(spec.output);
        if (!file) {
            err << "error: cannot write " << spec.output << "\n";
            return kExitInputError;
        }
        file << text;
        out << sum.line() << "\n";
    }
    return sum.failing_points == 0 ? kExitPass : kExitClauseFailure;
}

std::vector<Rational> rational_values(const Json& v, const std::string& name) {
    std::vector<Rational> out;
    auto one = [&](const Json& x) {
        if (x.is_string()) return parse_rational(x.get<std::string>());
        if (x.is_number_integer()) return Rational(x.get<long>());
        throw InvalidArgument("parameter " + name + ": values must be integers or \"p/q\" strings");
    };
    if (v.is_array()) {
        for (const auto& x : v) out.push_back(one(x));
    } else if (v.is_object()) {
        if (!v.contains("from") || !v.contains("to"))
            throw InvalidArgument("parameter " + name + ": range needs \"from\" and \"to\"");
        const Rational from = one(v.at("from")), to = one(v.at("to"));
        const Rational step = v.contains("step") ? one(v.at("step")) : Rational(1);
        if (step <= 0) throw InvalidArgument("parameter " + name + ": step must be positive");
        for (Rational x = from; x <= to; x += step) {
            out.push_back(x);
            if (out.size() > 100000) throw InvalidArgument("parameter " + name + ": range too large");
        }
    } else {
        out.push_back(one(v));
    }
    if (out.empty()) throw InvalidArgument("parameter " + name + ": empty value list");
    return out;
}

std::vector<long> n_values(const Json& v) {
    if (v.is_string()) return parse_range(v.get<std::string>());
    if (v.is_number_integer()) return {v.get<long>()};
    std::vector<long> out;
    if (v.is_array()) {
        for (const auto& x : v) out.push_back(x.get<long>());
    } else if (v.is_object() && v.contains("from") && v.contains("to")) {
        for (long k = v.at("from").get<long>(); k <= v.at("to").get<long>(); ++k) out.push_back(k);
    } else {
        throw InvalidArgument("\"n\" must be an integer, a list, \"a..b\" or {\"from\", \"to\"}");
    }
    if (out.empty()) throw InvalidArgument("\"n\" is empty");
    return out;
}

EPlacement parse_placement(const std::string& s) {
    for (auto p : {EPlacement::Any, EPlacement::BelowAll, EPlacement::Interior, EPlacement::AboveAll})
        if (placement_name(p) == s) return p;
    throw InvalidArgument("unknown placement '" + s + "' (any, below, interior, above)");
}

void check_oracle_name(const std::string& name) {
    if (name != "thm1" && name != "thm2star" && name != "thm2")
        throw InvalidArgument("unknown oracle '" + name + "' (thm1, thm2star, thm2)");
}

} // namespace

const std::vector<Table2Block>& table2_blocks() {
    static const std::vector<Table2Block> blocks{
        {6, 2, 14,
         {-0.203565, 0.101387, 0.369625, 0.59992, 0.785274, 0.918787},
         {-0.212298, 0.0784816, 0.335892, 0.560588, 0.747193, 0.890144},
         "-0.4", true, false},
        {7, 14, 2,
         {-0.931498, -0.818611, -0.661375, -0.465388, -0.237196, 0.017114, 0.296953},
         {-0.906419, -0.784335, -0.624494, -0.431566, -0.210968, 0.032615, 0.300166},
         "0.375", false, true},
    };
    return blocks;
}

std::vector<long> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const long v = std::stol(text, &used);
            if (used != text.size()) throw InvalidArgument("");
            return {v};
        }
        const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
        const long lo = std::stol(a, &used);
        if (used != a.size()) throw InvalidArgument("");
        const long hi = std::stol(b, &used);
        if (used != b.size()) throw InvalidArgument("");
        if (hi < lo) throw InvalidArgument("");
        std::vector<long> out;
        for (long k = lo; k <= hi; ++k) out.push_back(k);
        return out;
    } catch (const std::exception&) {
        throw InvalidArgument("malformed range '" + text + "' (expected \"a..b\" or an integer)");
    }
}

SweepSpec sweep_spec_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidArgument("sweep spec must be a JSON object");
    static const char* const known[] = {"relation", "oracle", "n", "params", "seeds",
                                        "placement", "output", "format", "workers"};
    for (const auto& [key, value] : j.items())
        if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return key == k; }) ==
            std::end(known))
            throw InvalidArgument("sweep spec: unknown key \"" + key + "\"");
    SweepSpec spec;
    if (j.contains("relation")) spec.relation = j.at("relation").get<std::string>();
    if (j.contains("oracle")) spec.oracle = j.at("oracle").get<std::string>();
    if (spec.relation.empty() == spec.oracle.empty())
        throw InvalidArgument("sweep spec needs exactly one of \"relation\" and \"oracle\"");
    if (!spec.relation.empty()) (void)parse_corollary(spec.relation);
    if (!spec.oracle.empty()) check_oracle_name(spec.oracle);
    if (!j.contains("n")) throw InvalidArgument("sweep spec needs \"n\"");
    spec.ns = n_values(j.at("n"));
    if (j.contains("params")) {
        if (!j.at("params").is_object()) throw InvalidArgument("\"params\" must be an object");
        for (const auto& [name, value] : j.at("params").items()) spec.grid[name] = rational_values(value, name);
    }
    if (j.contains("seeds")) spec.seeds = j.at("seeds").get<std::uint64_t>();
    if (!spec.oracle.empty() && spec.seeds == 0) throw InvalidArgument("oracle sweeps need \"seeds\" > 0");
    if (j.contains("placement")) spec.placement = parse_placement(j.at("placement").get<std::string>());
    if (j.contains("output")) spec.output = j.at("output").get<std::string>();
    if (j.contains("format")) spec.format = j.at("format").get<std::string>();
    if (spec.format != "csv" && spec.format != "json") throw InvalidArgument("\"format\" must be csv or json");
    if (j.contains("workers")) spec.workers = j.at("workers").get<unsigned>();
    return spec;
}

std::vector<SweepPoint> expand(const SweepSpec& spec) {
    std::vector<SweepPoint> points;
    const std::string name = spec.oracle.empty() ? spec.relation : "oracle-" + spec.oracle;
    for (long n : spec.ns) {
        if (!spec.oracle.empty()) {
            for (std::uint64_t s = 0; s < spec.seeds; ++s) points.push_back({name, n, {}, s});
            continue;
        }
        std::vector<ParamMap> combos{ParamMap{}};
        for (const auto& [pname, values] : spec.grid) {
            std::vector<ParamMap> next;
            for (const auto& base : combos)
                for (const auto& v : values) {
                    ParamMap m = base;
                    m[pname] = v;
                    next.push_back(std::move(m));
                }
            combos = std::move(next);
        }
        for (auto& m : combos) points.push_back({name, n, std::move(m), 0});
    }
    return points;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Interlacing of zeros for polynomials linked by mixed recurrence relations", "interlace"};
    app.require_subcommand(1);

    FamilyArgs fam;
    bool as_float = false;
    auto* poly = app.add_subcommand("poly", "print the monic polynomial as JSON");
    poly->add_option("--family", fam.family, "jacobi, laguerre, krawtchouk, meixner, narayana[-reduced|-christoffel|-perturbed]")
        ->required();
    poly->add_option("--n", fam.n, "degree index")->required();
    add_param_flags(poly, fam);
    poly->add_flag("--float", as_float, "demote coefficients to double");

    int digits = 6;
    bool plot = false;
    auto* zeros = app.add_subcommand("zeros", "zeros of a family member");
    zeros->add_option("--family", fam.family, "family kind")->required();
    zeros->add_option("--n", fam.n, "degree index")->required();
    add_param_flags(zeros, fam);
    zeros->add_option("--digits", digits, "significant digits printed")->check(CLI::Range(1, 17));
    zeros->add_flag("--plot-data", plot, "emit x,family CSV pairs instead of JSON");

    std::string corollary;
    bool as_json = false;
    int json_digits = 17;
    auto* check = app.add_subcommand("check", "run the theorem checker on a corollary instance");
    check->add_option("id", corollary, "krawtchouk-3.1, meixner-3.2, narayana-3.3, narayana-3.4, jacobi-3.5, "
                                       "jacobi-3.6, jacobi-4.2, laguerre-3.7")
        ->required();
    check->add_option("--n", fam.n, "degree index")->required();
    add_param_flags(check, fam);
    check->add_flag("--json", as_json, "print the report as JSON");
    check->add_option("--digits", json_digits, "digits for zeros in JSON")->check(CLI::Range(1, 17));

    int table_digits = 6;
    auto* table2 = app.add_subcommand("table2", "reproduce the Jacobi zero comparison table as CSV");
    table2->add_option("--digits", table_digits, "significant digits printed")->check(CLI::Range(1, 17));

    std::string sweep_file, oracle, n_range, placement, output, format;
    std::uint64_t seeds = 0;
    unsigned jobs = 0;
    auto* sweep = app.add_subcommand("sweep", "evaluate a parameter grid or oracle instances");
    sweep->add_option("spec", sweep_file, "sweep spec JSON file");
    sweep->add_option("--oracle", oracle, "thm1, thm2star or thm2");
    sweep->add_option("--n", n_range, "degree range a..b");
    sweep->add_option("--seeds", seeds, "seeds per n (oracle sweeps)");
    sweep->add_option("--placement", placement, "E placement for oracles: any, below, interior, above");
    sweep->add_option("--output", output, "output path (default stdout)");
    sweep->add_option("--format", format, "csv or json");
    sweep->add_option("--jobs", jobs, "worker threads (default: hardware concurrency)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitInputError;
    }

    try {
        const double floor = separation_floor();
        if (*poly) {
            const auto spec = spec_from_args(fam);
            const auto p = monic_by_recurrence(spec);
            out << (as_float ? to_json(demote(p)) : to_json(p)).dump() << "\n";
            return kExitPass;
        }
        if (*zeros) {
            const auto spec = spec_from_args(fam);
            ZeroSet zs;
            try {
                zs = zeros_of(spec);
            } catch (const RootFindError& ex) {
                err << "error: " << ex.what() << "\n";
                return kExitClauseFailure;
            }
            if (plot) {
                out << "x,family\n";
                for (Eigen::Index i = 0; i < zs.size(); ++i)
                    out << format_double(zs.zeros(i), digits) << "," << csv_escape(describe(spec)) << "\n";
            } else {
                Json j = to_json(zs, digits);
                j["family"] = to_json(spec);
                out << j.dump() << "\n";
            }
            return kExitPass;
        }
        if (*check) {
            const CorollaryId id = parse_corollary(corollary);
            const auto params = collect(fam.raw, corollary_params(id), corollary);
            const auto rep = check_relation(build_relation(id, fam.n, params), floor);
            if (as_json)
                out << to_json(rep, json_digits).dump(2) << "\n";
            else
                print_report(rep, out);
            return rep.passed() ? kExitPass : kExitClauseFailure;
        }
        if (*table2) return cmd_table2(table_digits, out, floor);
        if (*sweep) {
            SweepSpec spec;
            if (!sweep_file.empty()) {
                std::ifstream in(sweep_file);
                if (!in) throw InvalidArgument("cannot read sweep spec " + sweep_file);
                Json j;
                try {
                    j = Json::parse(in);
                } catch (const Json::parse_error& ex) {
                    throw InvalidArgument("sweep spec " + sweep_file + ": " + ex.what());
                }
                spec = sweep_spec_from_json(j);
            }
            if (!oracle.empty()) {
                check_oracle_name(oracle);
                spec.oracle = oracle;
                spec.relation.clear();
            }
            if (!n_range.empty()) spec.ns = parse_range(n_range);
            if (seeds != 0) spec.seeds = seeds;
            if (!placement.empty()) spec.placement = parse_placement(placement);
            if (!output.empty()) spec.output = output;
            if (!format.empty()) spec.format = format;
            if (jobs != 0) spec.workers = jobs;
            if (spec.relation.empty() && spec.oracle.empty())
                throw InvalidArgument("sweep needs a spec file or --oracle");
            if (spec.ns.empty()) throw InvalidArgument("sweep needs an n range");
            if (!spec.oracle.empty() && spec.seeds == 0) throw InvalidArgument("oracle sweeps need --seeds > 0");
            if (spec.format != "csv" && spec.format != "json") throw InvalidArgument("--format must be csv or json");
            return cmd_sweep(spec, out, err, floor);
        }
    } catch (const InvalidArgument& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const nlohmann::json::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"interlace"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace interlace
