// agdsim: Monte Carlo runner for local search on sparse random graphs and
// for the matching record-process samplers.
//
// Exit codes: 0 success, 1 configuration error, 2 a verification mode
// reported failures.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "agdsim/harness.hpp"

namespace {

using agdsim::ExperimentConfig;
using agdsim::ExperimentReport;
using agdsim::Mode;

struct CliValues {
    std::string config_file;
    std::string mode;
    std::optional<std::int64_t> n;
    std::optional<double> lambda, alpha, beta;
    std::optional<std::int64_t> window;
    std::optional<std::int64_t> reps;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<int> threads;
    std::optional<double> quad_abs, quad_rel;
    std::optional<int> quad_subdiv;
    std::vector<std::int64_t> n_list;
    std::vector<std::int64_t> a_list;
};

void add_common_options(CLI::App* cmd, CliValues& v) {
    cmd->add_option("--config", v.config_file, "JSON config file; flags override its values");
    cmd->add_option("--n", v.n, "vertex count");
    cmd->add_option("--lambda", v.lambda, "edge intensity");
    cmd->add_option("--alpha", v.alpha, "sparsity exponent in (0,1)");
    cmd->add_option("--beta", v.beta, "exploration rate");
    cmd->add_option("--A,--window", v.window, "record window A (record/poisson modes)");
    cmd->add_option("--reps", v.reps, "replications");
    cmd->add_option("--seed", v.seed, "master seed");
    cmd->add_option("--out", v.out, "output base path (.csv/.json appended)");
    cmd->add_option("--threads", v.threads, "worker threads (0 = hardware)");
    cmd->add_option("--quad-abs-tol", v.quad_abs, "quadrature absolute tolerance");
    cmd->add_option("--quad-rel-tol", v.quad_rel, "quadrature relative tolerance");
    cmd->add_option("--quad-max-subdiv", v.quad_subdiv, "quadrature max subdivisions");
}

ExperimentConfig build_config(const CliValues& v, std::optional<Mode> forced_mode) {
    ExperimentConfig cfg;
    if (!v.config_file.empty()) cfg = agdsim::load_config_json(v.config_file);
    if (forced_mode) {
        cfg.mode = *forced_mode;
    } else if (!v.mode.empty()) {
        cfg.mode = agdsim::parse_mode(v.mode);
    }
    if (v.n) cfg.n = *v.n;
    if (v.lambda) cfg.lambda = *v.lambda;
    if (v.alpha) cfg.alpha = *v.alpha;
    if (v.beta) cfg.beta = *v.beta;
    if (v.window) cfg.window = *v.window;
    if (v.reps) cfg.replications = *v.reps;
    if (v.seed) cfg.master_seed = *v.seed;
    if (v.out) cfg.out_path = *v.out;
    if (v.threads) cfg.threads = *v.threads;
    if (v.quad_abs) cfg.quadrature.abs_tol = *v.quad_abs;
    if (v.quad_rel) cfg.quadrature.rel_tol = *v.quad_rel;
    if (v.quad_subdiv) cfg.quadrature.max_subdivisions = *v.quad_subdiv;
    if (!v.n_list.empty()) cfg.n_list = v.n_list;
    if (!v.a_list.empty()) cfg.window_list = v.a_list;
    return cfg;
}

void print_summary(const ExperimentReport& report) {
    std::printf("mode=%s replications=%lld seed=%llu rng=%s wall=%.3fs\n",
                agdsim::mode_name(report.config.mode).c_str(),
                static_cast<long long>(report.config.replications),
                static_cast<unsigned long long>(report.config.master_seed),
                report.rng_name.c_str(), report.wall_seconds);
    for (const auto& line : report.stats) {
        std::printf("  %-24s mean=%.6g ci95=%.3g", line.name.c_str(), line.stats.mean,
                    line.stats.ci95_halfwidth);
        if (line.reference) std::printf(" ref=%.6g", *line.reference);
        if (line.ratio) std::printf(" ratio=%.4f", *line.ratio);
        std::printf("\n");
    }
    for (const auto& row : report.sweep) {
        std::printf("  n=%-8lld A=%-6lld mean_E=%.4f ref_exact=%.4f ratio_exact=%.4f "
                    "ratio_asym=%.4f ci=%.4f\n",
                    static_cast<long long>(row.n), static_cast<long long>(row.window),
                    row.mean_explorations, row.ref_exact, row.ratio_exact, row.ratio_asym,
                    row.ci95);
    }
    if (report.dominance) {
        const auto& d = *report.dominance;
        std::printf("  explorations: agd=%.4f baseline=%.4f pooled_se=%.4f dominance=%s "
                    "ks_info=%.4f\n",
                    d.explored_agd.mean, d.explored_baseline.mean, d.pooled_se,
                    d.mean_dominance_pass ? "pass" : "FAIL", d.ks_baseline_above_agd);
        for (const auto& row : d.deciles) {
            std::printf("    q%.0f: agd=%.0f baseline=%.0f %s\n", row.q * 100,
                        row.explored_agd, row.explored_baseline,
                        row.explored_agd <= row.explored_baseline ? "<=" : ">");
        }
    }
    for (const auto& check : report.checks) {
        std::printf("  [%s] %s (measured %.3g, bound %.3g)\n", check.pass ? "pass" : "FAIL",
                    check.name.c_str(), check.measured, check.bound);
    }
    if (!report.config.out_path.empty()) {
        const std::string base = agdsim::resolve_out_path(report.config.out_path);
        std::printf("  wrote %s.csv and %s.json\n", base.c_str(), base.c_str());
    }
}

int run_and_report(const ExperimentConfig& cfg) {
    const ExperimentReport report = agdsim::run_experiment(cfg);
    print_summary(report);
    const bool verify_mode = cfg.mode == Mode::VerifyAnalytics || cfg.mode == Mode::Dominance;
    if (verify_mode && !report.checks_passed) return 2;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local-search running-time simulator for sparse random graphs"};
    app.require_subcommand(1);

    CliValues sim_v, sweep_v, verify_v, couple_v, dominate_v;

    CLI::App* sim = app.add_subcommand("simulate", "run one experiment mode");
    sim->add_option("--mode", sim_v.mode,
                    "agd|gd|baseline|record-direct|record-jump|poisson-rep|coupled|"
                    "dominance|sweep|verify-analytics")
        ->required(false);
    add_common_options(sim, sim_v);
    sim->add_option("--n-list", sim_v.n_list, "graph sizes (sweep mode)")->delimiter(',');
    sim->add_option("--a-list", sim_v.a_list, "windows (verify-analytics mode)")->delimiter(',');

    CLI::App* sweep = app.add_subcommand("sweep", "mean explorations across graph sizes");
    add_common_options(sweep, sweep_v);
    sweep->add_option("--n-list", sweep_v.n_list, "comma separated graph sizes")->delimiter(',');

    CLI::App* verify = app.add_subcommand("verify-analytics", "analytic identity checks");
    add_common_options(verify, verify_v);
    verify->add_option("--a-list", verify_v.a_list, "comma separated windows")->delimiter(',');

    CLI::App* couple = app.add_subcommand("couple", "shared-stream search vs record comparison");
    add_common_options(couple, couple_v);

    CLI::App* dominate = app.add_subcommand("dominate", "cheapest vs first improvement");
    add_common_options(dominate, dominate_v);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (sim->parsed()) {
            if (sim_v.mode.empty() && sim_v.config_file.empty()) {
                std::cerr << "simulate: --mode (or --config) is required\n";
                return 1;
            }
            return run_and_report(build_config(sim_v, std::nullopt));
        }
        if (sweep->parsed()) return run_and_report(build_config(sweep_v, Mode::Sweep));
        if (verify->parsed()) return run_and_report(build_config(verify_v, Mode::VerifyAnalytics));
        if (couple->parsed()) return run_and_report(build_config(couple_v, Mode::Coupled));
        if (dominate->parsed()) return run_and_report(build_config(dominate_v, Mode::Dominance));
        std::cerr << "no subcommand given\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
