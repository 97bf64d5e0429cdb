// ddyck: counting, enumeration, series expansion, bijections, and the
// verification harness for restricted Dyck paths, column-convex polyominoes,
// and restricted (non-crossing) set partitions.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 cross-method disagreement, 4 membership violation. Diagnostics on
// stderr only.
#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ddyck/dyck.hpp"
#include "ddyck/genfunc.hpp"
#include "ddyck/partitions.hpp"
#include "ddyck/polyomino.hpp"
#include "ddyck/verify.hpp"

namespace {

using namespace ddyck;
using ordered_json = nlohmann::ordered_json;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

// Structural failures mean the input does not denote a valid object (2);
// predicate failures mean a valid object is outside the requested family (4).
int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::NotDDyck:
        case ErrorCode::NotNonDecreasing:
        case ErrorCode::NotNcdMember:
        case ErrorCode::CrossingPartition:
            return 4;
        default:
            return 2;
    }
}

struct CountArgs {
    std::string object;
    int d = 0;
    int n = 0;
    std::string method = "all";
    std::string format = "plain";
};

int run_count(const CountArgs& a) {
    bool want_formula = a.method == "formula" || a.method == "all";
    bool want_gf = a.method == "gf" || a.method == "all";
    bool want_brute = a.method == "brute" || a.method == "all";
    bool explicit_method = a.method != "all";

    // Domain limits per object; an explicitly requested route outside its
    // domain is a usage error, while "all" just skips it.
    auto route_unavailable = [&](const std::string& why) -> int {
        return usage_error(why);
    };
    std::vector<std::pair<std::string, Int>> results;

    if (a.object == "paths") {
        if (want_formula) {
            if (a.d >= 1)
                results.emplace_back("formula", count_d_dyck(a.n, a.d));
            else if (explicit_method)
                return route_unavailable("the closed-form count requires --d >= 1");
        }
        if (want_gf) {
            if (a.d >= 0)
                results.emplace_back("gf", series_coeffs(v_gf(a.d), a.n)[static_cast<std::size_t>(a.n)]);
            else if (explicit_method)
                return route_unavailable("the generating function requires --d >= 0");
        }
        if (want_brute) {
            Int c = 0;
            for_each_d_dyck(a.n, a.d, [&](const DyckPath&) { ++c; });
            results.emplace_back("brute", c);
        }
    } else if (a.object == "polyominoes") {
        if (a.d < 0) return usage_error("polyominoes require --d >= 0");
        if (want_formula) {
            if (a.d >= 1)
                results.emplace_back("formula", count_d_dyck(a.n, a.d));
            else if (explicit_method)
                return route_unavailable("the closed-form count requires --d >= 1");
        }
        if (want_gf)
            results.emplace_back("gf", series_coeffs(v_gf(a.d), a.n)[static_cast<std::size_t>(a.n)]);
        if (want_brute) {
            if (a.n == 0) {
                // No altitude vectors encode an empty polyomino; count it by
                // convention so every route reports 1 here.
                results.emplace_back("brute", 1);
            } else {
                Int c = 0;
                for_each_d_polyomino(a.n, a.d, [&](const Dccp&) { ++c; });
                results.emplace_back("brute", c);
            }
        }
    } else if (a.object == "ncd") {
        if (a.d < 1) return usage_error("restricted non-crossing partitions require --d >= 1");
        if (want_formula) results.emplace_back("formula", count_d_dyck(a.n, a.d));
        if (want_gf)
            results.emplace_back("gf", series_coeffs(v_gf(a.d), a.n)[static_cast<std::size_t>(a.n)]);
        if (want_brute) {
            Int c = 0;
            for_each_set_partition(a.n, [&](const SetPartition& p) {
                if (is_ncd_member(p, a.d)) ++c;
            });
            results.emplace_back("brute", c);
        }
    } else if (a.object == "bell") {
        if (a.d < 0) return usage_error("restricted Bell numbers require --d >= 0");
        if (a.method == "gf")
            return route_unavailable("restricted Bell numbers have no generating-function route");
        if (want_formula) results.emplace_back("formula", bell_d(a.n, a.d));
        if (want_brute) {
            Int c = 0;
            for_each_set_partition(a.n, [&](const SetPartition& p) {
                if (is_restricted_partition(p, a.d)) ++c;
            });
            results.emplace_back("brute", c);
        }
    }

    for (const auto& [route, value] : results)
        if (value != results.front().second) {
            std::cerr << "error: computation routes disagree:";
            for (const auto& [r, v] : results) std::cerr << " " << r << "=" << v.str();
            std::cerr << "\n";
            return 3;
        }

    const Int& value = results.front().second;
    if (a.format == "json") {
        ordered_json out;
        out["object"] = a.object;
        out["d"] = a.d;
        out["n"] = a.n;
        out["value"] = value.str();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << value.str() << "\n";
    }
    return 0;
}

int run_series(const std::string& kind, int d, int terms) {
    RationalGF gf = kind == "v" ? v_gf(d) : kind == "vstar" ? vstar_gf(d) : t_gf(d);
    std::vector<Int> coeffs = series_coeffs(gf, terms - 1);
    ordered_json out = ordered_json::array();
    for (const Int& c : coeffs) out.push_back(c.str());
    std::cout << out.dump() << "\n";
    return 0;
}

enum class ObjectKind { Path, Polyomino, Partition };

// Inputs are self-describing: JSON array = partition, JSON object =
// polyomino, anything else is read as a path word.
ObjectKind detect_kind(const std::string& input) {
    for (char c : input) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '[') return ObjectKind::Partition;
        if (c == '{') return ObjectKind::Polyomino;
        break;
    }
    return ObjectKind::Path;
}

SetPartition parse_partition_json(const std::string& input) {
    nlohmann::json j = nlohmann::json::parse(input, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw Error(ErrorCode::InvalidPartition, "partition input is not a JSON array of arrays");
    int n = 0;
    std::vector<std::vector<int>> blocks;
    for (const auto& jb : j) {
        if (!jb.is_array())
            throw Error(ErrorCode::InvalidPartition, "partition blocks must be JSON arrays");
        std::vector<int> block;
        for (const auto& jx : jb) {
            if (!jx.is_number_integer())
                throw Error(ErrorCode::InvalidPartition, "partition elements must be integers");
            int x = jx.get<int>();
            block.push_back(x);
            n = std::max(n, x);
        }
        blocks.push_back(std::move(block));
    }
    return SetPartition(n, std::move(blocks));
}

Dccp parse_polyomino_json(const std::string& input) {
    nlohmann::json j = nlohmann::json::parse(input, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("a") || !j.contains("b") ||
        !j["a"].is_array() || !j["b"].is_array())
        throw Error(ErrorCode::InvalidPolyomino,
                    "polyomino input must be a JSON object {\"a\":[...],\"b\":[...]}");
    std::vector<int> a, b;
    for (const auto& jx : j["a"]) {
        if (!jx.is_number_integer())
            throw Error(ErrorCode::InvalidPolyomino, "altitudes must be integers");
        a.push_back(jx.get<int>());
    }
    for (const auto& jx : j["b"]) {
        if (!jx.is_number_integer())
            throw Error(ErrorCode::InvalidPolyomino, "altitudes must be integers");
        b.push_back(jx.get<int>());
    }
    return Dccp(std::move(a), std::move(b));
}

int run_biject(const std::string& input, const std::string& to, int d, bool d_given) {
    ObjectKind from = detect_kind(input);
    bool partition_involved = from == ObjectKind::Partition || to == "partition";
    if (partition_involved && d < 1)
        return usage_error("partition conversions require --d >= 1");
    if (d_given && d < 0 && (from != ObjectKind::Path || to != "path"))
        return usage_error("--d must be >= 0 for polyomino conversions");

    // Everything routes through a path: ingest to a path (checking the
    // source family), then render the target.
    DyckPath path{""};
    if (from == ObjectKind::Path) {
        path = parse_path(input);
        if (d_given && !is_d_dyck(path, d))
            throw Error(ErrorCode::NotDDyck,
                        "path is not d-Dyck for d = " + std::to_string(d) +
                            " (a consecutive valley pair rises by less than d)");
    } else if (from == ObjectKind::Polyomino) {
        Dccp q = parse_polyomino_json(input);
        if (d_given && !is_d_restricted(q, d))
            throw Error(ErrorCode::NotDDyck,
                        "polyomino is not d-restricted for d = " + std::to_string(d) +
                            " (an initial-altitude gap after the second column is below d)");
        path = polyomino_to_path(q);
    } else {
        path = ncd_to_d_dyck(parse_partition_json(input), d);
    }

    if (to == "path") {
        std::cout << path.word() << "\n";
    } else if (to == "polyomino") {
        std::cout << serialize(path_to_polyomino(path)) << "\n";
    } else {
        std::cout << serialize(d_dyck_to_ncd(path, d)) << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    VerifyOptions options;
    bool no_timestamp = false;
};

int run_verify(VerifyArgs a) {
    // CI guard: the environment may lower the bounds, never raise them.
    if (const char* env = std::getenv("DDYCK_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0)
            a.options.max_n = std::min(a.options.max_n, static_cast<int>(v));
        else
            std::cerr << "warning: ignoring unparsable DDYCK_MAX_N=" << env << "\n";
    }
    VerificationReport report = run_verification(a.suite, a.options);
    std::cout << report_json(report, !a.no_timestamp);
    return report.pass ? 0 : 1;
}

struct EnumerateArgs {
    std::string object;
    int n = 0;
    int d = 0;
    bool d_given = false;
};

int run_enumerate(const EnumerateArgs& a) {
    if (a.object == "paths") {
        auto print = [](const DyckPath& p) { std::cout << p.word() << "\n"; };
        if (a.d_given)
            for_each_d_dyck(a.n, a.d, print);
        else
            for_each_dyck(a.n, print);
    } else if (a.object == "polyominoes") {
        if (a.d < 0) return usage_error("polyominoes require --d >= 0");
        for_each_d_polyomino(a.n, a.d, [](const Dccp& q) { std::cout << serialize(q) << "\n"; });
    } else if (a.object == "partitions") {
        for_each_set_partition(a.n,
                               [](const SetPartition& p) { std::cout << serialize(p) << "\n"; });
    } else {  // ncd
        if (a.d < 1) return usage_error("restricted non-crossing partitions require --d >= 1");
        for_each_set_partition(a.n, [&](const SetPartition& p) {
            if (is_ncd_member(p, a.d)) std::cout << serialize(p) << "\n";
        });
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of restricted Dyck paths, directed column-convex "
                 "polyominoes, and restricted non-crossing set partitions"};
    app.require_subcommand(1);

    CountArgs count_args;
    CLI::App* count = app.add_subcommand("count", "Count members of a family, cross-checking routes");
    count->add_option("--object", count_args.object, "Family: paths, polyominoes, ncd, bell")
        ->required()
        ->check(CLI::IsMember({"paths", "polyominoes", "ncd", "bell"}));
    count->add_option("-d,--d", count_args.d, "Restriction parameter")->required();
    count->add_option("-n,--n", count_args.n, "Semilength / area / ground-set size")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count->add_option("--method", count_args.method, "Computation route (default: all that apply)")
        ->check(CLI::IsMember({"formula", "gf", "brute", "all"}));
    count->add_option("--format", count_args.format, "Output format")
        ->check(CLI::IsMember({"plain", "json"}));

    std::string series_kind;
    int series_d = 0, series_terms = 0;
    CLI::App* series = app.add_subcommand("series", "Expand a generating function");
    series->add_option("--kind", series_kind, "v (counts), vstar (helper family), t (path length)")
        ->required()
        ->check(CLI::IsMember({"v", "vstar", "t"}));
    series->add_option("-d,--d", series_d, "Restriction parameter")
        ->required()
        ->check(CLI::NonNegativeNumber);
    series->add_option("--terms", series_terms, "Number of coefficients to print")
        ->required()
        ->check(CLI::PositiveNumber);

    std::string biject_input, biject_to;
    int biject_d = 0;
    CLI::App* biject = app.add_subcommand(
        "biject", "Map a path word, polyomino JSON, or partition JSON to another representation");
    biject->add_option("input", biject_input, "Path word, {\"a\":...,\"b\":...}, or [[...],...]")
        ->required();
    biject->add_option("--to", biject_to, "Target representation")
        ->required()
        ->check(CLI::IsMember({"path", "polyomino", "partition"}));
    CLI::Option* biject_d_opt = biject->add_option("-d,--d", biject_d, "Restriction parameter");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run formula-vs-oracle suites, emit a JSON report");
    verify->add_option("--suite", verify_args.suite, "eq1, thm2, thm3, thm5, thm6, or all")
        ->check(CLI::IsMember({"eq1", "thm2", "thm3", "thm5", "thm6", "all"}));
    verify->add_option("--max-n", verify_args.options.max_n, "Largest size per suite (default 10)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--max-d", verify_args.options.max_d, "Largest d per suite (default 3)")
        ->check(CLI::NonNegativeNumber);
    verify->add_flag("--no-timestamp", verify_args.no_timestamp,
                     "Omit the timestamp for byte-identical reports");
    verify
        ->add_option("--corrupt-fd-term", verify_args.options.corrupt_fd_term,
                     "Mutation test: poison this term (0..17) of the path-length numerator")
        ->check(CLI::Range(0, 17));
    verify->add_option("--corrupt-fd-delta", verify_args.options.corrupt_fd_delta,
                       "Mutation test: amount added to the poisoned term (default 1)");

    EnumerateArgs enum_args;
    CLI::App* enumerate =
        app.add_subcommand("enumerate", "Stream family members, one per line, in fixed order");
    enumerate->add_option("--object", enum_args.object, "paths, polyominoes, partitions, ncd")
        ->required()
        ->check(CLI::IsMember({"paths", "polyominoes", "partitions", "ncd"}));
    enumerate->add_option("-n,--n", enum_args.n, "Semilength / area / ground-set size")
        ->required()
        ->check(CLI::NonNegativeNumber);
    CLI::Option* enum_d_opt = enumerate->add_option("-d,--d", enum_args.d, "Restriction parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return run_count(count_args);
        if (series->parsed()) return run_series(series_kind, series_d, series_terms);
        if (biject->parsed())
            return run_biject(biject_input, biject_to, biject_d, biject_d_opt->count() > 0);
        if (verify->parsed()) return run_verify(verify_args);
        enum_args.d_given = enum_d_opt->count() > 0;
        return run_enumerate(enum_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
