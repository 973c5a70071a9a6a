// SPDX-License-Identifier: Apache-2.0
//
// pcrank: analyze pairwise-comparison matrices from the command line.
//
// Subcommands
//   rank           priority weights and the ordinal ranking
//   inconsistency  Koczkodaj and Saaty inconsistency indices
//   certify        rank-stability certificate (exit 0 iff order certified)
//   compare        distance and rank correlation between the two methods
//   montecarlo     random-perturbation study, written as files
//
// Exit codes: 0 success/certified, 1 not certified, 2 input error,
// 3 tie or gap degeneracy.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <pcrank/bounds.hpp>
#include <pcrank/inconsistency.hpp>
#include <pcrank/matrix_io.hpp>
#include <pcrank/montecarlo.hpp>
#include <pcrank/prioritize.hpp>
#include <pcrank/rankstats.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr int kExitCertified = 0;
constexpr int kExitNotCertified = 1;
constexpr int kExitInputError = 2;
constexpr int kExitDegenerate = 3;

std::string fmt(double v) {
    char buf[32];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, p);
}

std::string join(const std::vector<double>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += fmt(xs[i]);
    }
    return out;
}

/// "2 > 1 > 3" with 1-based item labels in descending weight order.
std::string ranking_line(const pcrank::OrdinalRanking& r) {
    std::string out;
    for (int i = 0; i < r.size(); ++i) {
        if (i) out += " > ";
        out += std::to_string(r.order()[static_cast<std::size_t>(i)] + 1);
    }
    return out;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + p.string());
    out << text;
}

struct CommonOpts {
    std::string input;
    std::string format = "plain";
    double tol = 1e-12;
};

int cmd_rank(const CommonOpts& opt, const std::string& method) {
    const pcrank::PCMatrix m = pcrank::load_matrix(opt.input);
    const bool want_ev = method != "gm";
    const bool want_gm = method != "ev";

    std::optional<pcrank::PriorityVector> ev, gm;
    if (want_ev) ev.emplace(pcrank::evm(m, {.tol = opt.tol}));
    if (want_gm) gm.emplace(pcrank::gmm(m));
    const pcrank::OrdinalRanking ranking = pcrank::ordinal_ranking(want_ev ? *ev : *gm);

    if (opt.format == "json") {
        ordered_json j;
        j["n"] = m.size();
        if (ev) j["lambda_max"] = *ev->lambda_max();
        if (ev) j["weights_ev"] = ev->weights();
        if (gm) j["weights_gm"] = gm->weights();
        std::vector<int> order;
        for (int i : ranking.order()) order.push_back(i + 1);
        j["ranking"] = order;
        j["tied"] = ranking.tied();
        std::cout << j.dump(2) << '\n';
    } else if (opt.format == "csv") {
        std::cout << "item";
        if (ev) std::cout << ",weight_ev";
        if (gm) std::cout << ",weight_gm";
        std::cout << '\n';
        for (int i = 0; i < m.size(); ++i) {
            std::cout << i + 1;
            if (ev) std::cout << ',' << fmt((*ev)[i]);
            if (gm) std::cout << ',' << fmt((*gm)[i]);
            std::cout << '\n';
        }
    } else {
        std::cout << "n: " << m.size() << '\n';
        if (ev) std::cout << "lambda_max: " << fmt(*ev->lambda_max()) << '\n';
        if (ev) std::cout << "weights_ev: " << join(ev->weights(), " ") << '\n';
        if (gm) std::cout << "weights_gm: " << join(gm->weights(), " ") << '\n';
        std::cout << "ranking: " << ranking_line(ranking) << '\n';
        if (ranking.tied()) std::cout << "tied: true\n";
    }
    return kExitCertified;
}

int cmd_inconsistency(const CommonOpts& opt) {
    const pcrank::PCMatrix m = pcrank::load_matrix(opt.input);
    const pcrank::InconsistencyReport r = pcrank::inconsistency_report(m, {.tol = opt.tol});

    if (opt.format == "json") {
        ordered_json j{{"n", r.n},
                       {"ki", r.ki},
                       {"kappa", r.kappa},
                       {"lambda_max", r.lambda_max},
                       {"ci", r.ci}};
        std::cout << j.dump(2) << '\n';
    } else if (opt.format == "csv") {
        std::cout << "n,ki,kappa,lambda_max,ci\n"
                  << r.n << ',' << fmt(r.ki) << ',' << fmt(r.kappa) << ','
                  << fmt(r.lambda_max) << ',' << fmt(r.ci) << '\n';
    } else {
        std::cout << "n: " << r.n << '\n'
                  << "ki: " << fmt(r.ki) << '\n'
                  << "kappa: " << fmt(r.kappa) << '\n'
                  << "lambda_max: " << fmt(r.lambda_max) << '\n'
                  << "ci: " << fmt(r.ci) << '\n';
    }
    return kExitCertified;
}

void print_certificate(const pcrank::StabilityCertificate& c, const std::string& format) {
    if (format == "json") {
        std::cout << pcrank::to_json(c) << '\n';
        return;
    }
    if (format == "csv") {
        std::cout << "n,ki,kappa,md_lower,md_upper,min_gap,top_gap,max_swaps,"
                     "order_certified,top_certified,tau_lower,rho_lower\n"
                  << c.n << ',' << fmt(c.ki) << ',' << fmt(c.kappa) << ',' << fmt(c.md_lower)
                  << ',' << fmt(c.md_upper) << ',' << fmt(c.min_gap) << ',' << fmt(c.top_gap)
                  << ',' << c.max_swaps << ',' << (c.order_certified ? 1 : 0) << ','
                  << (c.top_certified ? 1 : 0) << ',' << fmt(c.tau_lower) << ','
                  << fmt(c.rho_lower) << '\n';
        return;
    }
    std::cout << "n: " << c.n << '\n'
              << "ki: " << fmt(c.ki) << '\n'
              << "kappa: " << fmt(c.kappa) << '\n'
              << "md_lower: " << fmt(c.md_lower) << '\n'
              << "md_upper: " << fmt(c.md_upper) << '\n'
              << "min_gap: " << fmt(c.min_gap) << '\n'
              << "top_gap: " << fmt(c.top_gap) << '\n'
              << "max_swaps: " << c.max_swaps << '\n'
              << "order_certified: " << (c.order_certified ? "true" : "false") << '\n'
              << "top_certified: " << (c.top_certified ? "true" : "false") << '\n'
              << "tau_lower: " << fmt(c.tau_lower) << '\n'
              << "rho_lower: " << fmt(c.rho_lower) << '\n';
}

int cmd_certify_matrix(const CommonOpts& opt) {
    const pcrank::PCMatrix m = pcrank::load_matrix(opt.input);
    const pcrank::StabilityCertificate c = pcrank::full_certificate(m, {.tol = opt.tol});
    print_certificate(c, opt.format);
    return c.order_certified ? kExitCertified : kExitNotCertified;
}

int cmd_certify_bounds(double ki, double d, std::optional<double> dstar, int n,
                       const std::string& format) {
    const pcrank::DistanceBounds b = pcrank::md_bounds(ki);
    pcrank::StabilityCertificate c{};
    c.n = n;
    c.ki = ki;
    c.kappa = 1.0 - ki;
    c.md_lower = b.lower;
    c.md_upper = b.upper;
    c.min_gap = d;
    c.top_gap = dstar.value_or(d); // the top gap is never smaller than the min gap
    c.max_swaps = pcrank::max_feasible_swaps(c.min_gap, c.md_upper, n);
    c.order_certified = c.min_gap > c.md_upper;
    c.top_certified = c.top_gap > c.md_upper;
    c.tau_lower = pcrank::tau_lower_bound(n, c.max_swaps);
    c.rho_lower = pcrank::rho_lower_bound(n, c.max_swaps);
    print_certificate(c, format);
    return c.order_certified ? kExitCertified : kExitNotCertified;
}

int cmd_compare(const CommonOpts& opt) {
    const pcrank::PCMatrix m = pcrank::load_matrix(opt.input);
    const pcrank::PriorityVector ev = pcrank::evm(m, {.tol = opt.tol});
    const pcrank::PriorityVector gm = pcrank::gmm(m);
    const double md = pcrank::manhattan_distance(ev, gm);
    const double ki = pcrank::koczkodaj_ki(m);
    const pcrank::DistanceBounds b = pcrank::md_bounds(ki);
    const double tau = pcrank::kendall_tau(pcrank::ordinal_ranking(ev), pcrank::ordinal_ranking(gm));
    const double rho = pcrank::spearman_rho(pcrank::ordinal_ranking(ev), pcrank::ordinal_ranking(gm));

    if (opt.format == "json") {
        ordered_json j{{"n", m.size()}, {"ki", ki},   {"md", md},
                       {"md_lower", b.lower},         {"md_upper", b.upper},
                       {"tau", tau},  {"rho", rho}};
        std::cout << j.dump(2) << '\n';
    } else if (opt.format == "csv") {
        std::cout << "n,ki,md,md_lower,md_upper,tau,rho\n"
                  << m.size() << ',' << fmt(ki) << ',' << fmt(md) << ',' << fmt(b.lower) << ','
                  << fmt(b.upper) << ',' << fmt(tau) << ',' << fmt(rho) << '\n';
    } else {
        std::cout << "n: " << m.size() << '\n'
                  << "ki: " << fmt(ki) << '\n'
                  << "md: " << fmt(md) << '\n'
                  << "md_lower: " << fmt(b.lower) << '\n'
                  << "md_upper: " << fmt(b.upper) << '\n'
                  << "tau: " << fmt(tau) << '\n'
                  << "rho: " << fmt(rho) << '\n';
    }
    return kExitCertified;
}

int cmd_montecarlo(const pcrank::McConfig& cfg, int threads, const fs::path& out_dir) {
    const pcrank::McResult r = pcrank::run_experiment(cfg, threads);
    fs::create_directories(out_dir);
    write_file(out_dir / "result.json", pcrank::result_json(r));
    write_file(out_dir / "trials.csv", pcrank::trials_csv(r));
    write_file(out_dir / "histogram_ki.csv", pcrank::histogram_csv(r, pcrank::HistAxis::ki));
    write_file(out_dir / "histogram_ci.csv", pcrank::histogram_csv(r, pcrank::HistAxis::ci));
    std::cout << "trials: " << r.total_trials << '\n'
              << "tied: " << r.tied_trial_count << '\n'
              << "fraction_meeting: " << fmt(r.fraction_meeting) << '\n';
    return kExitCertified;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pairwise-comparison matrix analysis"};
    app.require_subcommand(1);

    const auto formats = CLI::IsMember({"plain", "json", "csv"});

    CommonOpts rank_opt, inc_opt, cert_opt, cmp_opt;
    std::string method = "both";

    auto* rank = app.add_subcommand("rank", "derive priority weights and the ordinal ranking");
    rank->add_option("--input", rank_opt.input, "matrix file (.csv or .json)")->required();
    rank->add_option("--format", rank_opt.format, "output format")->check(formats);
    rank->add_option("--method", method, "weighting method")
        ->check(CLI::IsMember({"ev", "gm", "both"}));
    rank->add_option("--tol", rank_opt.tol, "eigenvector iteration tolerance");

    auto* inc = app.add_subcommand("inconsistency", "inconsistency indices of a matrix");
    inc->add_option("--input", inc_opt.input, "matrix file (.csv or .json)")->required();
    inc->add_option("--format", inc_opt.format, "output format")->check(formats);
    inc->add_option("--tol", inc_opt.tol, "eigenvector iteration tolerance");

    double b_ki = 0.0, b_d = 0.0;
    std::optional<double> b_dstar;
    int b_n = 0;
    auto* cert = app.add_subcommand(
        "certify", "certify rank agreement between the eigenvalue and geometric-mean methods");
    auto* cert_input = cert->add_option("--input", cert_opt.input, "matrix file (.csv or .json)");
    cert->add_option("--format", cert_opt.format, "output format")->check(formats);
    cert->add_option("--tol", cert_opt.tol, "eigenvector iteration tolerance");
    auto* cert_ki = cert->add_option("--ki", b_ki, "bounds-only: inconsistency value in [0,1)");
    auto* cert_d = cert->add_option("--d", b_d, "bounds-only: minimal weight gap");
    cert->add_option("--dstar", b_dstar, "bounds-only: top weight gap (defaults to --d)");
    auto* cert_n = cert->add_option("--n", b_n, "bounds-only: number of objects")
                       ->check(CLI::Range(2, 1'000'000));
    cert_ki->needs(cert_d)->needs(cert_n)->excludes(cert_input);
    cert_input->excludes(cert_ki);

    auto* cmp = app.add_subcommand("compare", "distance and rank correlation between methods");
    cmp->add_option("--input", cmp_opt.input, "matrix file (.csv or .json)")->required();
    cmp->add_option("--format", cmp_opt.format, "output format")->check(formats);
    cmp->add_option("--tol", cmp_opt.tol, "eigenvector iteration tolerance");

    pcrank::McConfig cfg;
    bool clamp = false;
    int threads = 0;
    std::string out_dir;
    auto* mc = app.add_subcommand("montecarlo", "random-perturbation study over a beta sweep");
    mc->add_option("--n", cfg.n, "matrix size")->check(CLI::Range(2, 64));
    mc->add_option("--bases", cfg.base_count, "number of consistent base matrices")
        ->check(CLI::PositiveNumber);
    mc->add_option("--beta-max", cfg.beta_end, "last perturbation amplitude")
        ->check(CLI::Range(1.0, 1e6));
    mc->add_option("--beta-step", cfg.beta_step, "amplitude increment")->check(CLI::PositiveNumber);
    mc->add_option("--seed", cfg.master_seed, "master seed");
    mc->add_flag("--clamp", clamp, "clip disturbed entries into the fundamental scale [1/9, 9]");
    mc->add_option("--threads", threads, "worker threads (0 = hardware)")
        ->check(CLI::Range(0, 4096));
    mc->add_option("--out", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (*rank) return cmd_rank(rank_opt, method);
        if (*inc) return cmd_inconsistency(inc_opt);
        if (*cert) {
            if (cert_ki->count() > 0)
                return cmd_certify_bounds(b_ki, b_d, b_dstar, b_n, cert_opt.format);
            if (cert_input->count() == 0) {
                std::cerr << "certify needs --input or the bounds-only flags --ki --d --n\n";
                return kExitInputError;
            }
            return cmd_certify_matrix(cert_opt);
        }
        if (*cmp) return cmd_compare(cmp_opt);
        if (*mc) {
            if (clamp) cfg.clamp = pcrank::ScaleBound::fundamental();
            return cmd_montecarlo(cfg, threads, out_dir);
        }
    } catch (const pcrank::Error& e) {
        std::cerr << e.what() << '\n';
        const bool degenerate = e.code() == pcrank::errc::ties_present ||
                                e.code() == pcrank::errc::degenerate_gap;
        return degenerate ? kExitDegenerate : kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
