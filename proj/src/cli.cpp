#include "mtcodes/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "mtcodes/json_io.hpp"
#include "mtcodes/verify.hpp"

namespace mtcodes {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::parse_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(errc::parse_error, "cannot write " + path);
    out << content;
}

// "n,a" with a possibly negative; a is reduced later against the field.
std::pair<std::uint32_t, std::int64_t> parse_binomial_arg(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        raise(errc::parse_error, "expected \"n,a\" but got \"" + text + '"');
    try {
        const unsigned long n = std::stoul(text.substr(0, comma));
        const long long a = std::stoll(text.substr(comma + 1));
        return {static_cast<std::uint32_t>(n), a};
    } catch (const std::exception&) {
        raise(errc::parse_error, "expected \"n,a\" but got \"" + text + '"');
    }
}

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("MTCODES_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string vector_array_string(const std::vector<std::uint16_t>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    out += ']';
    return out;
}

const char* status_word(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::skipped: return "SKIP";
    }
    return "?";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"multi-twisted code construction and search toolkit", "mtcodes"};
    app.require_subcommand(1);
    int threads_flag = 0;
    app.add_option("--threads", threads_flag, "worker cap (default: MTCODES_THREADS or all cores)");

    // factor
    auto* factor_cmd = app.add_subcommand("factor", "factor x^n - a into monic irreducibles");
    std::uint32_t factor_q = 0, factor_n = 0;
    std::int64_t factor_a = 0;
    factor_cmd->add_option("--q", factor_q, "prime field size")->required();
    factor_cmd->add_option("--n", factor_n, "binomial degree")->required();
    factor_cmd->add_option("--a", factor_a, "shift constant")->required();

    // gcd
    auto* gcd_cmd = app.add_subcommand("gcd", "gcd of two binomials x^n1 - a1, x^n2 - a2");
    std::uint32_t gcd_q = 0;
    std::string gcd_b1, gcd_b2;
    gcd_cmd->add_option("--q", gcd_q, "prime field size")->required();
    gcd_cmd->add_option("--b1", gcd_b1, "first binomial as n,a")->required();
    gcd_cmd->add_option("--b2", gcd_b2, "second binomial as n,a")->required();

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "build a code from a template JSON");
    std::string construct_spec, construct_out;
    bool construct_mindist = false;
    construct_cmd->add_option("--spec", construct_spec, "template JSON file")->required();
    construct_cmd->add_option("--out", construct_out, "output code JSON file")->required();
    construct_cmd->add_flag("--mindist", construct_mindist, "also compute the exact distance");

    // mindist
    auto* mindist_cmd = app.add_subcommand("mindist", "exact minimum distance of a code spec");
    std::string mindist_code, mindist_method = "auto";
    std::uint64_t mindist_budget = kExhaustiveDispatchLimit;
    mindist_cmd->add_option("--code", mindist_code, "code spec JSON file")->required();
    mindist_cmd->add_option("--method", mindist_method, "auto|exhaustive|bz")
        ->check(CLI::IsMember({"auto", "exhaustive", "bz"}));
    mindist_cmd->add_option("--budget", mindist_budget, "message budget for exhaustive");

    // search
    auto* search_cmd = app.add_subcommand("search", "randomized multiplier search");
    std::string search_config, search_table, search_out;
    std::uint64_t search_seed = 0;
    bool search_seed_given = false;
    search_cmd->add_option("--config", search_config, "search config JSON file")->required();
    search_cmd->add_option("--table", search_table, "best-known table CSV (default: bundled)");
    search_cmd->add_option("--out", search_out, "results CSV file")->required();
    auto* seed_opt = search_cmd->add_option("--seed", search_seed, "overrides the config seed");

    // verify-paper
    auto* verify_cmd = app.add_subcommand("verify-paper", "reproduce the bundled reference examples");
    bool skip_slow = false;
    verify_cmd->add_flag("--skip-slow", skip_slow, "skip the [53,18,21] GF(5) computation");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }
    search_seed_given = seed_opt->count() > 0;

    const int threads = resolve_threads(threads_flag);
    DistanceOptions dist;
    dist.threads = threads;

    try {
        if (app.got_subcommand(factor_cmd)) {
            const PrimeField f(factor_q);
            const Factorization fact = factor_binomial(Binomial(factor_n, f.element(factor_a)));
            for (const Poly& p : fact.factors) out << coeff_array_string(p) << '\n';
            return 0;
        }

        if (app.got_subcommand(gcd_cmd)) {
            const PrimeField f(gcd_q);
            const auto [n1, a1] = parse_binomial_arg(gcd_b1);
            const auto [n2, a2] = parse_binomial_arg(gcd_b2);
            const Poly g = binomial_gcd(Binomial(n1, f.element(a1)), Binomial(n2, f.element(a2)));
            out << coeff_array_string(g) << '\n';
            return 0;
        }

        if (app.got_subcommand(construct_cmd)) {
            const ConstructionSpec spec = parse_construction_json(read_file(construct_spec));
            BuildOptions opts;
            opts.dist = dist;
            ConstructionReport report = build(spec, opts);
            if (construct_mindist) compute_actual_distance(report, dist);
            write_file(construct_out, construction_output_json(report) + "\n");

            out << "construction: " << construction_name(spec) << '\n';
            out << "params: [" << report.code.params().n << ',' << report.code.params().k
                << "] over GF(" << report.code.params().q << ")\n";
            out << "bound: " << bound_kind_name(report.bound_kind) << ' ' << report.bound_value
                << '\n';
            for (const auto& c : report.constituents)
                out << "constituent: [" << c.n << ',' << c.k << ',' << (c.d ? *c.d : 0) << "]\n";
            if (report.actual_d) out << "actual_d: " << *report.actual_d << '\n';
            out << "wrote " << construct_out << '\n';
            return 0;
        }

        if (app.got_subcommand(mindist_cmd)) {
            const GenMatrix m = parse_code_spec_json(read_file(mindist_code));
            DistanceResult res;
            if (mindist_method == "exhaustive")
                res = min_distance_exhaustive(m, mindist_budget, dist);
            else if (mindist_method == "bz")
                res = min_distance_bz(m, dist);
            else
                res = min_distance(m, dist);
            out << "d=" << res.d << '\n';
            out << "witness=" << vector_array_string(res.witness) << '\n';
            return 0;
        }

        if (app.got_subcommand(search_cmd)) {
            SearchConfig config = parse_search_config_json(read_file(search_config));
            if (search_seed_given) config.seed = search_seed;
            BestKnownTable table = BestKnownTable::bundled();
            if (!search_table.empty()) {
                std::ifstream in(search_table);
                if (!in) raise(errc::parse_error, "cannot open " + search_table);
                table = BestKnownTable::from_csv(in);
            }
            const std::vector<SearchResult> results = run_search(config, table, threads);
            std::ostringstream csv;
            write_results_csv(csv, results);
            write_file(search_out, csv.str());
            out << "wrote " << results.size() << " results to " << search_out << '\n';
            return 0;
        }

        if (app.got_subcommand(verify_cmd)) {
            const VerifyReport report = run_reference_checks(skip_slow, dist);
            std::size_t passed = 0, failed = 0, skipped = 0;
            for (const auto& c : report.checks) {
                out << status_word(c.status) << ' ' << c.name << ": expected " << c.expected
                    << ", got " << c.computed << '\n';
                if (c.status == CheckStatus::pass) ++passed;
                if (c.status == CheckStatus::fail) ++failed;
                if (c.status == CheckStatus::skipped) ++skipped;
            }
            out << "OVERALL " << (report.overall ? "PASS" : "FAIL") << " (" << report.checks.size()
                << " checks, " << passed << " passed, " << failed << " failed, " << skipped
                << " skipped)\n";
            return report.overall ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace mtcodes
