// staircase: command-line front end for the staircase ideal library.
//
// Subcommands: construct, verify, mu, power-profile, search, scan.
// Global flags --json (machine-readable payloads) and --workers N.
// Exit codes: 0 ok, 1 domain error, 2 usage or parse error.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "staircase/constructions.hpp"
#include "staircase/ideal.hpp"
#include "staircase/ideal_io.hpp"
#include "staircase/search.hpp"

namespace {

using staircase::Exponent;
using staircase::StaircaseIdeal;
using Json = nlohmann::ordered_json;

Json ideal_json(const StaircaseIdeal& ideal) {
    Json arr = Json::array();
    for (const auto& g : ideal.gens())
        arr.push_back(Json::array({g.xexp, g.yexp}));
    return arr;
}

void emit(const Json& payload) {
    std::cout << payload.dump() << '\n';
}

// Accepts "4" or "3..5".
std::pair<std::size_t, std::size_t> parse_m_range(const std::string& text) {
    const auto bad = [&]() -> CLI::ValidationError {
        return CLI::ValidationError("--m", "expected an integer or a range like 3..5, got '" +
                                              text + "'");
    };
    const auto parse_one = [&](const std::string& part) {
        std::size_t pos = 0;
        std::size_t value = 0;
        try {
            value = std::stoull(part, &pos);
        } catch (const std::exception&) {
            throw bad();
        }
        if (pos != part.size() || part.empty())
            throw bad();
        return value;
    };
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const std::size_t m = parse_one(text);
        return {m, m};
    }
    const std::size_t lo = parse_one(text.substr(0, dots));
    const std::size_t hi = parse_one(text.substr(dots + 2));
    if (lo > hi)
        throw bad();
    return {lo, hi};
}

const char* const kConditionNames[5] = {
    "(1) u1*um divides u2*u(m-1)",
    "(2) u1*u(m-1) divides u2*u3 and u(m-2)^2",
    "(3) u2^2 divides u1*u3 and u1*u(m-2)",
    "(4) u2*um divides u3*u(m-1) and u(m-2)*u(m-1)",
    "(5) u(m-1)^2 divides u3*um and u(m-2)*um",
};

struct Options {
    bool json = false;
    unsigned workers = 0;

    staircase::SearchOptions search() const {
        staircase::SearchOptions opt;
        opt.workers = workers;
        return opt;
    }
};

int cmd_construct(const Options& opt, std::size_t m, unsigned k) {
    const StaircaseIdeal power = staircase::ideal_power(staircase::tiny_square_ideal(m), k);
    if (opt.json)
        emit(ideal_json(power));
    else
        std::cout << staircase::ideal_to_string(power) << '\n';
    return 0;
}

int cmd_verify(const Options& opt, std::size_t m) {
    const staircase::ConditionReport report =
        staircase::check_conditions(staircase::tiny_square_ideal(m));
    if (opt.json) {
        Json payload;
        payload["m"] = report.m;
        payload["conditions"] = report.conditions;
        payload["mu_square"] = report.mu_square;
        Json predicted = Json::array();
        for (const auto& g : report.predicted_generators)
            predicted.push_back(Json::array({g.xexp, g.yexp}));
        payload["predicted_generators"] = predicted;
        payload["verified"] = report.verified;
        emit(payload);
    } else {
        std::cout << "m = " << report.m << '\n';
        for (std::size_t c = 0; c < report.conditions.size(); ++c)
            std::cout << "condition " << kConditionNames[c] << ": "
                      << (report.conditions[c] ? "holds" : "FAILS") << '\n';
        std::cout << "mu(I^2) = " << report.mu_square << '\n';
        std::cout << "predicted generators of I^2: "
                  << staircase::ideal_to_string(StaircaseIdeal(report.predicted_generators))
                  << '\n';
        std::cout << "verified: " << (report.verified ? "yes" : "no") << '\n';
    }
    return report.verified ? 0 : 1;
}

int cmd_mu(const Options& opt, const std::string& path, unsigned k) {
    const StaircaseIdeal ideal = staircase::load_ideal_file(path);
    const std::size_t value = staircase::mu(staircase::ideal_power(ideal, k));
    if (opt.json)
        emit(Json(value));
    else
        std::cout << value << '\n';
    return 0;
}

int cmd_power_profile(const Options& opt, const std::string& path, std::size_t m,
                      unsigned kmax) {
    if (path.empty() == (m == 0))
        throw CLI::ValidationError("power-profile", "exactly one of FILE or --m is required");
    const StaircaseIdeal ideal =
        path.empty() ? staircase::tiny_square_ideal(m) : staircase::load_ideal_file(path);
    const auto profile = staircase::power_mu_profile(ideal, kmax);
    if (opt.json) {
        Json rows = Json::array();
        for (const auto& [k, value] : profile)
            rows.push_back(Json::array({k, value}));
        emit(rows);
    } else {
        std::cout << "k  mu(I^k)\n";
        for (const auto& [k, value] : profile)
            std::cout << k << "  " << value << '\n';
    }
    return 0;
}

int cmd_search(const Options& opt, std::size_t m, Exponent bound) {
    const staircase::SearchOutcome outcome = staircase::min_mu_square(m, bound, opt.search());
    const std::string label = "verified within exponent bound " + std::to_string(bound);
    if (opt.json) {
        Json payload;
        payload["m"] = outcome.m;
        payload["bound"] = outcome.bound;
        payload["minimum_mu_square"] = outcome.minimum_mu_square;
        payload["witness"] = ideal_json(outcome.witness);
        payload["candidates_examined"] = outcome.candidates_examined;
        payload["label"] = label;
        emit(payload);
    } else {
        std::cout << "minimum mu(I^2) over m=" << outcome.m
                  << " staircases: " << outcome.minimum_mu_square << " (" << label
                  << "; evidence, not a proof)\n";
        std::cout << "witness: " << staircase::ideal_to_string(outcome.witness) << '\n';
        std::cout << "candidates examined: " << outcome.candidates_examined << '\n';
    }
    return 0;
}

int cmd_scan(const Options& opt, Exponent gap, const std::string& m_range, Exponent bound,
             const std::string& out_path) {
    const auto [m_lo, m_hi] = parse_m_range(m_range);
    const auto rows = staircase::two_degree_scan(gap, m_lo, m_hi, bound, opt.search());

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out)
            throw std::runtime_error("staircase: cannot open '" + out_path + "' for writing");
        staircase::write_scan_csv(out, rows);
        out.flush();
        if (!out.good())
            throw std::runtime_error("staircase: write to '" + out_path + "' failed");
    }

    if (opt.json) {
        Json payload = Json::array();
        for (const auto& row : rows) {
            Json r;
            r["m"] = row.m;
            r["gap"] = row.gap;
            r["bound"] = row.bound;
            r["min_mu_square"] =
                row.min_mu_square ? Json(*row.min_mu_square) : Json(nullptr);
            r["witness"] = row.witness ? ideal_json(*row.witness) : Json(nullptr);
            r["candidates_examined"] = row.candidates_examined;
            payload.push_back(r);
        }
        emit(payload);
    } else if (!out_path.empty()) {
        std::cout << "scan complete: " << rows.size() << " rows (gap=" << gap
                  << ", bound=" << bound << ") written to " << out_path << '\n';
    } else {
        staircase::write_scan_csv(std::cout, rows);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Staircase ideals in two variables: constructions whose squares need few "
                 "generators, power profiles, and bounded searches for minimal mu(I^2)."};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "Emit machine-readable JSON payloads");
    app.add_option("--workers", opt.workers,
                   "Worker threads for searches (0 = all hardware threads)");

    // The global flags are also registered on every subcommand so they may
    // appear on either side of the subcommand name.
    const auto add_globals = [&](CLI::App* sub) {
        sub->add_flag("--json", opt.json, "Emit machine-readable JSON payloads");
        sub->add_option("--workers", opt.workers,
                        "Worker threads for searches (0 = all hardware threads)");
        return sub;
    };

    auto* construct = add_globals(
        app.add_subcommand("construct", "Print the m-generator ideal whose square has nine "
                                        "generators, or a power of it"));
    std::size_t construct_m = 0;
    unsigned construct_k = 1;
    construct->add_option("--m", construct_m, "Number of generators (m >= 5)")->required();
    construct->add_option("--k", construct_k, "Print the k-th power (k >= 1)");

    auto* verify = add_globals(
        app.add_subcommand("verify", "Check the five divisibility conditions that force "
                                     "mu(I^2) = 9 on the built-in construction"));
    std::size_t verify_m = 0;
    verify->add_option("--m", verify_m, "Number of generators (m >= 5)")->required();

    auto* mu_cmd = add_globals(
        app.add_subcommand("mu", "Print mu(I^k) for an ideal read from a file"));
    std::string mu_file;
    unsigned mu_k = 1;
    mu_cmd->add_option("file", mu_file, "Ideal file (JSON array of [xexp, yexp] pairs)")
        ->required();
    mu_cmd->add_option("--k", mu_k, "Power to inspect (default 1)");

    auto* profile = add_globals(
        app.add_subcommand("power-profile", "Print mu(I^k) for k = 1..kmax"));
    std::string profile_file;
    std::size_t profile_m = 0;
    unsigned profile_kmax = 5;
    profile->add_option("file", profile_file, "Ideal file (JSON array of [xexp, yexp] pairs)");
    profile->add_option("--m", profile_m, "Use the built-in construction with m generators");
    profile->add_option("--kmax", profile_kmax, "Largest power to profile (default 5)");

    auto* search = add_globals(
        app.add_subcommand("search", "Exhaustive minimum of mu(I^2) over all staircases with "
                                     "m generators and exponents within a bound"));
    std::size_t search_m = 0;
    Exponent search_bound = 0;
    search->add_option("--m", search_m, "Number of generators")->required();
    search->add_option("--bound", search_bound, "Exponent bound")->required();

    auto* scan = add_globals(
        app.add_subcommand("scan", "Tabulate the minimum of mu(I^2) over two-degree "
                                   "staircases with a fixed degree gap"));
    Exponent scan_gap = 0;
    std::string scan_m = "1";
    Exponent scan_bound = 0;
    std::string scan_out;
    scan->add_option("--gap", scan_gap, "Degree gap d2 - d1 (>= 1)")->required();
    scan->add_option("--m", scan_m, "Generator count or range, e.g. 4 or 3..5")->required();
    scan->add_option("--bound", scan_bound, "Exponent bound")->required();
    scan->add_option("--out", scan_out, "Write the CSV table to this path");

    try {
        app.parse(argc, argv);
        if (*construct)
            return cmd_construct(opt, construct_m, construct_k);
        if (*verify)
            return cmd_verify(opt, verify_m);
        if (*mu_cmd)
            return cmd_mu(opt, mu_file, mu_k);
        if (*profile)
            return cmd_power_profile(opt, profile_file, profile_m, profile_kmax);
        if (*search)
            return cmd_search(opt, search_m, search_bound);
        if (*scan)
            return cmd_scan(opt, scan_gap, scan_m, scan_bound, scan_out);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const staircase::IdealParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
}
