// Command-line front end: solve, amatrix, verify, induct, info.
//
// Exit codes: 0 ok, 2 bad input, 3 enumeration cap exceeded, 10 math alert
// (a negative multiplicity was found), 1 internal error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hessmult/amatrix.hpp"
#include "hessmult/hessenberg.hpp"
#include "hessmult/sink_induction.hpp"
#include "hessmult/solver.hpp"
#include "hessmult/sweep.hpp"
#include "hessmult/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitOverCap = 3;
constexpr int kExitMathAlert = 10;

struct Config {
    int n_cap = hessmult::kDefaultCap;
    std::string cache_dir_flag;
    int jobs = 0;  // 0 = all cores
    std::string format = "json";

    std::filesystem::path cache_dir() const {
        if (!cache_dir_flag.empty()) return cache_dir_flag;
        if (const char* env = std::getenv("HESSMULT_CACHE")) return env;
        return ".hessmult-cache";
    }
};

using hessmult::AMatrix;
using hessmult::HessFunction;
using hessmult::MultTable;
using hessmult::Partition;

void print_solve_table(const MultTable& m, std::optional<int> degree, std::ostream& os) {
    os << "n = " << m.h.n() << ", h = (" << m.h.to_string() << "), ht = " << m.height
       << ", max degree = " << m.max_degree << "\n";
    os << "betti:";
    for (auto b : m.betti) os << ' ' << b;
    os << "\n";
    std::size_t width = 2;
    for (const Partition& p : m.order) width = std::max(width, p.to_string().size());
    os << std::string(width, ' ')
       << (degree ? "  coefficient at degree " + std::to_string(*degree)
                  : "  coefficients by degree")
       << "\n";
    for (std::size_t i = 0; i < m.order.size(); ++i) {
        std::string label = m.order[i].to_string();
        os << label << std::string(width - label.size(), ' ') << " ";
        if (degree)
            os << ' ' << m.coeff(static_cast<int>(i), *degree);
        else
            for (auto c : m.coeffs[i]) os << ' ' << c;
        os << "\n";
    }
    os << "nonnegative: " << (m.nonnegative ? "yes" : "no") << "\n";
}

void print_solve_csv(const MultTable& m, std::optional<int> degree, std::ostream& os) {
    os << "mu,degree,coefficient\n";
    for (std::size_t i = 0; i < m.order.size(); ++i)
        for (int d = 0; d <= m.max_degree; ++d) {
            if (degree && d != *degree) continue;
            os << '"' << m.order[i].to_string() << "\"," << d << ','
               << m.coeff(static_cast<int>(i), d) << "\n";
        }
}

int cmd_solve(const Config& cfg, const std::string& h_text, std::optional<int> degree) {
    const HessFunction h = HessFunction::parse(h_text);
    hessmult::require_within_cap(h.n(), cfg.n_cap);
    if (degree && *degree < 0) throw std::invalid_argument("solve: negative degree");
    const AMatrix a = hessmult::a_matrix_cached(h.n(), cfg.cache_dir(), false, cfg.jobs);
    const MultTable m = hessmult::solve(h, a, cfg.jobs);

    if (cfg.format == "table") {
        print_solve_table(m, degree, std::cout);
    } else if (cfg.format == "csv") {
        print_solve_csv(m, degree, std::cout);
    } else if (degree) {
        nlohmann::json j = nlohmann::json::parse(m.to_json_string());
        j["degree"] = *degree;
        for (auto& c : j["coefficients"]) {
            std::int64_t v = 0;
            if (*degree <= m.max_degree)
                v = c["by_degree"][static_cast<std::size_t>(*degree)].get<std::int64_t>();
            c["by_degree"] = nlohmann::json::array({v});
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << m.to_json_string() << "\n";
    }
    if (!m.nonnegative) {
        std::cerr << "math alert: negative multiplicity found for h = (" << h.to_string()
                  << ")\n";
        return kExitMathAlert;
    }
    return kExitOk;
}

int cmd_amatrix(const Config& cfg, int n, bool recompute) {
    if (n < 1) throw std::invalid_argument("amatrix: n must be >= 1");
    hessmult::require_within_cap(n, cfg.n_cap);
    const AMatrix a = hessmult::a_matrix_cached(n, cfg.cache_dir(), recompute, cfg.jobs);
    if (cfg.format == "table" || cfg.format == "csv") {
        const char sep = cfg.format == "csv" ? ',' : ' ';
        for (int li = 0; li < a.size(); ++li) {
            std::cout << a.order[static_cast<std::size_t>(li)].to_string();
            for (int mi = 0; mi < a.size(); ++mi) std::cout << sep << a.at(li, mi);
            std::cout << "\n";
        }
    } else {
        nlohmann::json j;
        j["n"] = a.n;
        auto& order = j["order"] = nlohmann::json::array();
        for (const Partition& p : a.order) order.push_back(p.parts());
        j["entries"] = a.entries;
        std::cout << j.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_info(const Config& cfg, const std::string& h_text) {
    const HessFunction h = HessFunction::parse(h_text);
    hessmult::require_within_cap(h.n(), cfg.n_cap);
    const auto ideal = hessmult::ideal_of(h);
    const auto graph = hessmult::incomparability_graph(h);
    const int m = hessmult::max_sink_size(graph);

    auto roots_json = [](const std::vector<hessmult::RootPair>& roots) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : roots) arr.push_back({r.i, r.j});
        return arr;
    };

    nlohmann::json j;
    j["n"] = h.n();
    j["h"] = h.values();
    j["phi_h_minus"] = roots_json(hessmult::hess_negative_roots(h));
    j["ideal"] = roots_json(ideal.ideal);
    auto& series = j["lower_central_series"] = nlohmann::json::array();
    for (const auto& term : ideal.series) series.push_back(roots_json(term));
    j["ht"] = ideal.height;
    j["graph"] = nlohmann::json::parse(graph.to_json_string());
    j["max_sink_size"] = m;
    auto& sinks = j["max_sink_sets"] = nlohmann::json::array();
    if (m >= 1)
        for (const auto& s : hessmult::sink_sets(graph, m))
            sinks.push_back({{"deg", s.degree}, {"vertices", s.vertices}});

    if (cfg.format == "table") {
        std::cout << "h = (" << h.to_string() << "), n = " << h.n() << "\n";
        std::cout << "edges:";
        for (const auto& [x, y] : graph.edges) std::cout << " {" << x << "," << y << "}";
        std::cout << "\nideal roots:";
        for (const auto& r : ideal.ideal) std::cout << " (" << r.i << "," << r.j << ")";
        std::cout << "\nht = " << ideal.height << ", max sink set size = " << m << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_induct(const Config& cfg, const std::string& h_text, const std::string& mu_text) {
    const HessFunction h = HessFunction::parse(h_text);
    hessmult::require_within_cap(h.n(), cfg.n_cap);
    const Partition mu = Partition::parse(mu_text);
    if (mu.total() != h.n())
        throw std::invalid_argument("induct: mu must be a partition of n");

    hessmult::InductionContext ctx;
    const hessmult::InductionResult r = hessmult::inductive_coeffs(h, mu, &ctx, cfg.jobs);
    const AMatrix a = hessmult::a_matrix_cached(h.n(), cfg.cache_dir(), false, cfg.jobs);
    const MultTable direct = hessmult::solve(h, a, cfg.jobs);

    std::vector<std::int64_t> direct_by_degree;
    for (int d = 0; d <= direct.max_degree; ++d) direct_by_degree.push_back(direct.coeff(mu, d));
    const bool matches = direct_by_degree == r.total_by_degree;

    if (cfg.format == "table") {
        std::cout << "h = (" << h.to_string() << "), mu = " << mu.to_string() << "\n";
        for (const auto& b : r.branches) {
            std::cout << "T = [";
            for (std::size_t i = 0; i < b.T.size(); ++i)
                std::cout << (i ? "," : "") << b.T[i];
            std::cout << "], deg = " << b.deg << ", reduced h = (" << b.reduced.to_string()
                      << "), term:";
            for (auto v : b.term_by_degree) std::cout << ' ' << v;
            std::cout << "\n";
        }
        std::cout << "total:";
        for (auto v : r.total_by_degree) std::cout << ' ' << v;
        std::cout << "\ndirect:";
        for (auto v : direct_by_degree) std::cout << ' ' << v;
        std::cout << "\nmatches: " << (matches ? "yes" : "no") << "\n";
    } else {
        nlohmann::json j;
        j["h"] = h.values();
        j["mu"] = mu.parts();
        auto& branches = j["branches"] = nlohmann::json::array();
        for (const auto& b : r.branches)
            branches.push_back({{"T", b.T},
                                {"deg", b.deg},
                                {"h_reduced", b.reduced.values()},
                                {"term_by_degree", b.term_by_degree}});
        j["total_by_degree"] = r.total_by_degree;
        j["direct_by_degree"] = direct_by_degree;
        j["matches_direct"] = matches;
        std::cout << j.dump(2) << "\n";
    }
    return matches ? kExitOk : kExitInternal;
}

int cmd_verify(const Config& cfg, const std::string& h_text, int all_n,
               const std::string& checks_csv) {
    auto checks_for = [&](int n) {
        return checks_csv.empty() ? hessmult::CheckSet::default_for(n)
                                  : hessmult::CheckSet::parse(checks_csv);
    };

    bool any_fail = false;
    bool any_alert = false;
    auto emit = [&](const hessmult::VerificationReport& r) {
        if (cfg.format == "table") {
            std::size_t ok = 0;
            for (const auto& c : r.checks) ok += c.pass ? 1 : 0;
            std::cout << "h = (" << r.h->to_string() << "): " << ok << "/" << r.checks.size()
                      << " checks passed\n";
        } else {
            std::cout << r.to_json().dump() << "\n";
        }
        if (!r.passed()) any_fail = true;
        if (r.math_alert) any_alert = true;
    };

    if (!h_text.empty()) {
        const HessFunction h = HessFunction::parse(h_text);
        hessmult::require_within_cap(h.n(), cfg.n_cap);
        const AMatrix a = hessmult::a_matrix_cached(h.n(), cfg.cache_dir(), false, cfg.jobs);
        const auto dt = hessmult::descent_counts(h.n(), cfg.jobs);
        emit(hessmult::verify_h(h, a, dt, checks_for(h.n())));
    } else {
        hessmult::ScanSummary summary =
            hessmult::scan(all_n, checks_for(all_n), cfg.jobs, emit, cfg.n_cap);
        if (cfg.format == "table")
            std::cout << summary.passed << "/" << summary.total << " functions passed\n";
        else
            std::cout << summary.to_json().dump() << "\n";
    }
    if (any_alert) return kExitMathAlert;
    return any_fail ? kExitInternal : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact multiplicities of tabloid modules in the cohomology of regular "
                 "semisimple Hessenberg varieties"};
    app.require_subcommand(1);
    // --h is taken by the Hessenberg function everywhere, so help loses its
    // short form.  Global options are accepted on either side of the
    // subcommand name.
    app.set_help_flag("--help", "print help");

    Config cfg;
    app.add_option("--cap", cfg.n_cap, "enumeration cap on n (default 9)");
    app.add_option("--cache-dir", cfg.cache_dir_flag,
                   "cache directory (overrides HESSMULT_CACHE)");
    app.add_option("--jobs", cfg.jobs, "worker count, 0 = all cores");
    app.add_option("--format", cfg.format, "json | csv | table")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    std::string h_text;
    std::string mu_text;
    std::string checks_csv;
    int n = 0;
    int all_n = 0;
    int degree = -1;
    bool recompute = false;

    CLI::App* solve = app.add_subcommand("solve", "solve the multiplicity system for one h");
    solve->set_help_flag("--help", "print help");
    solve->fallthrough();
    solve->add_option("--h", h_text, "Hessenberg function, e.g. 2,4,4,5,5")->required();
    solve->add_option("--degree", degree, "restrict output to one degree")
        ->check(CLI::NonNegativeNumber);

    CLI::App* amatrix = app.add_subcommand("amatrix", "print (and cache) the system matrix");
    amatrix->set_help_flag("--help", "print help");
    amatrix->fallthrough();
    amatrix->add_option("--n", n, "matrix size parameter")->required();
    amatrix->add_flag("--recompute", recompute, "ignore the cache and rebuild");

    CLI::App* verify = app.add_subcommand("verify", "run the verification checks");
    verify->set_help_flag("--help", "print help");
    verify->fallthrough();
    verify->add_option("--h", h_text, "verify a single Hessenberg function");
    verify->add_option("--all-n", all_n, "verify every Hessenberg function on [n]");
    verify->add_option("--checks", checks_csv,
                       "comma-separated check names (default: profile for n)");

    CLI::App* induct = app.add_subcommand("induct", "recursive coefficients for maximal parts");
    induct->set_help_flag("--help", "print help");
    induct->fallthrough();
    induct->add_option("--h", h_text, "Hessenberg function")->required();
    induct->add_option("--mu", mu_text, "partition with exactly ht+1 parts")->required();

    CLI::App* info = app.add_subcommand("info", "roots, ideal, graph, and sink data for h");
    info->set_help_flag("--help", "print help");
    info->fallthrough();
    info->add_option("--h", h_text, "Hessenberg function")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (solve->parsed())
            return cmd_solve(cfg, h_text,
                             degree >= 0 ? std::optional<int>(degree) : std::nullopt);
        if (amatrix->parsed()) return cmd_amatrix(cfg, n, recompute);
        if (verify->parsed()) {
            if (h_text.empty() && all_n < 1)
                throw std::invalid_argument("verify: pass --h or --all-n");
            return cmd_verify(cfg, h_text, all_n, checks_csv);
        }
        if (induct->parsed()) return cmd_induct(cfg, h_text, mu_text);
        if (info->parsed()) return cmd_info(cfg, h_text);
        return kExitBadInput;
    } catch (const hessmult::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOverCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
