// msm: matching distances between multisets over a pointed metric space.
//
// Subcommands compute the four distances (dist, zdist, qdist, ldist), print
// the prefix-sequence gap table (cauchy), expose the assignment solver on a
// raw cost matrix (solve), and run every property suite (check).
//
// Output discipline: stdout is buffered and written only when the command
// succeeds, so error paths never leave partial output.  Exit codes: 0 on
// success, 1 when `check` finds a failing suite, 2 on parse or validation
// errors, 3 when an input exceeds the solver size cap.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "msm/format.hpp"
#include "msm/json_io.hpp"
#include "msm/suites.hpp"
#include "msm/test_hooks.hpp"

namespace {

using msm::Json;

struct Options {
    std::string space_file;
    std::string a_file;
    std::string b_file;
    std::uint64_t seed = 42;
    std::int64_t iterations = 10000;
    double tolerance = 1e-9;
    std::size_t cap = msm::kDefaultSizeCap;
    std::string format = "csv";
    int prefixes = 20;
    double inject_cost_bug = 0.0;
};

// Re-throws a field-level validation error with the originating file name
// prepended (file-level errors from load_json_file already carry it).
template <typename Fn>
auto with_file_context(const std::string& path, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const msm::ValidationError& e) {
        throw msm::ValidationError(path + ": " + e.what());
    }
}

msm::GroundSpacePtr load_space(const std::string& path) {
    const Json j = msm::load_json_file(path);
    return with_file_context(path, [&] { return msm::parse_space(j); });
}

msm::Multiset load_multiset(const std::string& path, msm::GroundSpacePtr space) {
    const Json j = msm::load_json_file(path);
    return with_file_context(path, [&] { return msm::parse_multiset(j, std::move(space)); });
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (const char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string run_dist(const Options& opt) {
    msm::GroundSpacePtr space = load_space(opt.space_file);
    const msm::Multiset a = load_multiset(opt.a_file, space);
    const msm::Multiset b = load_multiset(opt.b_file, space);
    return msm::format_distance(msm::matching_distance(a, b, opt.cap)) + "\n";
}

std::string run_zdist(const Options& opt) {
    msm::GroundSpacePtr space = load_space(opt.space_file);
    const Json ja = msm::load_json_file(opt.a_file);
    const msm::SignedMultiset a =
        with_file_context(opt.a_file, [&] { return msm::parse_signed_multiset(ja, space); });
    const Json jb = msm::load_json_file(opt.b_file);
    const msm::SignedMultiset b =
        with_file_context(opt.b_file, [&] { return msm::parse_signed_multiset(jb, space); });
    return msm::format_distance(msm::group_distance(a, b, opt.cap)) + "\n";
}

std::string run_qdist(const Options& opt) {
    const Json jq = msm::load_json_file(opt.space_file);
    const msm::QuotientSpace qs =
        with_file_context(opt.space_file, [&] { return msm::parse_quotient_space(jq); });
    const Json ja = msm::load_json_file(opt.a_file);
    const msm::Element a =
        with_file_context(opt.a_file, [&] { return msm::parse_element(ja, "element"); });
    const Json jb = msm::load_json_file(opt.b_file);
    const msm::Element b =
        with_file_context(opt.b_file, [&] { return msm::parse_element(jb, "element"); });
    const double value =
        msm::quotient_distance(qs, msm::collapse(qs, a), msm::collapse(qs, b));
    return msm::format_distance(value) + "\n";
}

std::string run_ldist(const Options& opt) {
    msm::GroundSpacePtr space = load_space(opt.space_file);
    const Json ja = msm::load_json_file(opt.a_file);
    const msm::TruncatedL1Multiset a =
        with_file_context(opt.a_file, [&] { return msm::parse_l1_multiset(ja, space); });
    const Json jb = msm::load_json_file(opt.b_file);
    const msm::TruncatedL1Multiset b =
        with_file_context(opt.b_file, [&] { return msm::parse_l1_multiset(jb, space); });
    const msm::DistanceInterval interval = msm::l1_distance(a, b, opt.cap);
    return msm::format_distance(interval.lower()) + " " + msm::format_distance(interval.upper()) +
           "\n";
}

std::string run_cauchy(const Options& opt) {
    const auto table = msm::cauchy_gap_table(opt.prefixes);
    if (opt.format == "json") {
        Json rows = Json::array();
        for (const auto& row : table) {
            rows.push_back(
                Json{{"m", row.m}, {"n", row.n}, {"gap", row.gap}, {"bound", row.bound}});
        }
        return rows.dump() + "\n";
    }
    std::string out = "m,n,gap,bound\n";
    for (const auto& row : table) {
        out += std::to_string(row.m) + "," + std::to_string(row.n) + "," +
               msm::format_distance(row.gap) + "," + msm::format_distance(row.bound) + "\n";
    }
    return out;
}

std::string run_solve(const Options& opt) {
    const Json j = msm::load_json_file(opt.a_file);
    const msm::CostMatrix matrix =
        with_file_context(opt.a_file, [&] { return msm::parse_cost_matrix(j); });
    const msm::Assignment result = msm::solve_assignment(matrix, opt.cap);
    if (opt.format == "json") {
        return Json{{"total_cost", result.total_cost}, {"row_to_col", result.row_to_col}}.dump() +
               "\n";
    }
    std::string out = msm::format_distance(result.total_cost) + "\n";
    for (std::size_t i = 0; i < result.row_to_col.size(); ++i) {
        out += (i == 0 ? "" : " ") + std::to_string(result.row_to_col[i]);
    }
    out += "\n";
    return out;
}

std::string run_check(const Options& opt, int& exit_code) {
    msm::SuiteConfig config;
    config.seed = opt.seed;
    config.iterations = opt.iterations;
    config.tolerance_abs = opt.tolerance;
    config.solver_size_cap = opt.cap;
    msm::testing::CostPerturbationGuard guard(opt.inject_cost_bug);

    const auto results = msm::run_all_suites(config);
    bool all_passed = true;
    for (const auto& r : results) all_passed = all_passed && r.passed();
    exit_code = all_passed ? 0 : 1;

    if (opt.format == "json") {
        Json suites = Json::array();
        for (const auto& r : results) {
            suites.push_back(Json{{"suite", r.name},
                                  {"checks", r.checks},
                                  {"failures", r.failures},
                                  {"status", r.passed() ? "pass" : "fail"},
                                  {"counterexample", r.counterexample.empty()
                                                         ? Json(nullptr)
                                                         : Json::parse(r.counterexample)}});
        }
        const Json report{{"seed", config.seed},
                          {"iterations", config.iterations},
                          {"tolerance_abs", config.tolerance_abs},
                          {"solver_size_cap", config.solver_size_cap},
                          {"suites", std::move(suites)},
                          {"all_passed", all_passed}};
        return report.dump() + "\n";
    }
    std::string out = "suite,checks,failures,status,counterexample\n";
    for (const auto& r : results) {
        out += r.name + "," + std::to_string(r.checks) + "," + std::to_string(r.failures) + "," +
               (r.passed() ? "pass" : "fail") + "," + csv_quote(r.counterexample) + "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matching distances between multisets over a pointed metric space"};
    app.require_subcommand(1);
    Options opt;

    const std::string format_help = "output format for tables and reports";
    const auto format_check = CLI::IsMember({"csv", "json"});

    CLI::App* dist = app.add_subcommand("dist", "matching distance between two multisets");
    dist->add_option("--space", opt.space_file, "ground space JSON file")->required();
    dist->add_option("--a", opt.a_file, "first multiset JSON file")->required();
    dist->add_option("--b", opt.b_file, "second multiset JSON file")->required();
    dist->add_option("--cap", opt.cap, "solver size cap");

    CLI::App* zdist = app.add_subcommand("zdist", "group distance between two signed multisets");
    zdist->add_option("--space", opt.space_file, "ground space JSON file")->required();
    zdist->add_option("--a", opt.a_file, "first signed multiset JSON file")->required();
    zdist->add_option("--b", opt.b_file, "second signed multiset JSON file")->required();
    zdist->add_option("--cap", opt.cap, "solver size cap");

    CLI::App* qdist = app.add_subcommand("qdist", "quotient distance between two elements");
    qdist->add_option("--space", opt.space_file, "quotient space JSON file")->required();
    qdist->add_option("--a", opt.a_file, "first element JSON file")->required();
    qdist->add_option("--b", opt.b_file, "second element JSON file")->required();

    CLI::App* ldist = app.add_subcommand("ldist", "distance interval between truncated l1-multisets");
    ldist->add_option("--space", opt.space_file, "ground space JSON file")->required();
    ldist->add_option("--a", opt.a_file, "first truncated l1-multiset JSON file")->required();
    ldist->add_option("--b", opt.b_file, "second truncated l1-multiset JSON file")->required();
    ldist->add_option("--cap", opt.cap, "solver size cap");

    CLI::App* cauchy = app.add_subcommand("cauchy", "pairwise gap table of the prefix sequence");
    cauchy->add_option("--prefixes", opt.prefixes, "number of sequence prefixes (1 to 40)");
    cauchy->add_option("--format", opt.format, format_help)->check(format_check);

    CLI::App* solve = app.add_subcommand("solve", "minimum-cost assignment for a raw cost matrix");
    solve->add_option("--a", opt.a_file, "cost matrix JSON file ([[...],...] or {\"matrix\":[[...]]})")
        ->required();
    solve->add_option("--cap", opt.cap, "solver size cap");
    solve->add_option("--format", opt.format, format_help)->check(format_check);

    CLI::App* check = app.add_subcommand("check", "run every property suite and report results");
    check->add_option("--seed", opt.seed, "base seed for the per-suite generators");
    check->add_option("--iters", opt.iterations, "iterations per sampled suite");
    check->add_option("--tol", opt.tolerance, "absolute tolerance for solver-accumulated checks");
    check->add_option("--cap", opt.cap, "solver size cap");
    check->add_option("--format", opt.format, format_help)->check(format_check);
    check->add_option("--inject-cost-bug", opt.inject_cost_bug)->group("");  // test-only fault hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*check) {
            // The environment variable wins over the flag so wrappers can pin
            // a seed without threading it through every call site.
            if (const char* env_seed = std::getenv("MSM_SEED")) {
                char* end = nullptr;
                const unsigned long long parsed = std::strtoull(env_seed, &end, 10);
                if (end == env_seed || *end != '\0') {
                    std::cerr << "error: MSM_SEED must be an unsigned integer, got \"" << env_seed
                              << "\"\n";
                    return 2;
                }
                opt.seed = static_cast<std::uint64_t>(parsed);
            }
        }
        if (opt.cap < 1) {
            std::cerr << "error: --cap must be at least 1\n";
            return 2;
        }
        if (opt.tolerance <= 0.0) {
            std::cerr << "error: --tol must be positive\n";
            return 2;
        }
        if (opt.iterations < 1) {
            std::cerr << "error: --iters must be at least 1\n";
            return 2;
        }

        std::string out;
        int exit_code = 0;
        if (*dist) out = run_dist(opt);
        else if (*zdist) out = run_zdist(opt);
        else if (*qdist) out = run_qdist(opt);
        else if (*ldist) out = run_ldist(opt);
        else if (*cauchy) out = run_cauchy(opt);
        else if (*solve) out = run_solve(opt);
        else if (*check) out = run_check(opt, exit_code);

        std::cout << out << std::flush;
        return exit_code;
    } catch (const msm::SizeCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const msm::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
