#include "agdsim/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "agdsim/poisson.hpp"
#include "agdsim/record.hpp"
#include "agdsim/search.hpp"

namespace agdsim {

namespace {

// Stream tag separated per mode so e.g. the three record samplers draw
// independent randomness under one master seed.
std::uint64_t mode_cost_tag(Mode mode) {
    return kCostStreamTag ^ (static_cast<std::uint64_t>(mode) << 32);
}

int effective_threads(int requested, std::int64_t replications) {
    int t = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (static_cast<std::int64_t>(t) > replications) t = static_cast<int>(replications);
    return t;
}

template <class PerRep>
void parallel_for_reps(std::int64_t replications, int threads, PerRep&& per_rep) {
    const int t = effective_threads(threads, replications);
    if (t <= 1) {
        for (std::int64_t r = 0; r < replications; ++r) per_rep(r);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(t));
    for (int w = 0; w < t; ++w) {
        const std::int64_t lo = replications * w / t;
        const std::int64_t hi = replications * (w + 1) / t;
        pool.emplace_back([lo, hi, &per_rep] {
            for (std::int64_t r = lo; r < hi; ++r) per_rep(r);
        });
    }
    for (auto& th : pool) th.join();
}

ModelParams require_params(const ExperimentConfig& cfg) {
    if (!cfg.n) throw std::invalid_argument("config: this mode requires n");
    return derive_params(*cfg.n, cfg.lambda, cfg.alpha, cfg.beta);
}

std::int64_t require_window(const ExperimentConfig& cfg) {
    if (cfg.window) {
        if (*cfg.window < 1) throw std::invalid_argument("config: window must be >= 1");
        return *cfg.window;
    }
    if (cfg.n) return require_params(cfg).window;
    throw std::invalid_argument("config: record modes require window (A) or n");
}

struct SearchSamples {
    std::vector<double> steps, visits, explorations;
};

SearchSamples run_search_samples(Mode mode, const ModelParams& mp, std::int64_t reps,
                                 std::uint64_t master_seed, int threads, std::int64_t cap) {
    SearchSamples s;
    s.steps.resize(static_cast<std::size_t>(reps));
    s.visits.resize(static_cast<std::size_t>(reps));
    s.explorations.resize(static_cast<std::size_t>(reps));
    const std::uint64_t cost_tag = mode_cost_tag(mode);

    if (mode == Mode::Gd) {
        if (mp.n > cap) {
            throw std::invalid_argument(
                "config: gd needs a materialised graph; n exceeds the explicit cap");
        }
        parallel_for_reps(reps, threads, [&](std::int64_t r) {
            const std::uint64_t rs =
                replication_seed({master_seed, static_cast<std::uint64_t>(r)});
            const ExplicitGraph g =
                sample_explicit(mp, derive_stream_seed(rs, kEdgeStreamTag), cap);
            CostStream costs(derive_stream_seed(rs, cost_tag));
            const auto start = pick_start_vertex(derive_stream_seed(rs, kStartStreamTag), mp.n);
            const SearchOutcome out = run_gd(g, mp, costs, start);
            s.steps[r] = static_cast<double>(out.steps);
            s.visits[r] = static_cast<double>(out.visits);
            s.explorations[r] = static_cast<double>(out.explorations);
        });
        return s;
    }

    parallel_for_reps(reps, threads, [&](std::int64_t r) {
        const std::uint64_t rs = replication_seed({master_seed, static_cast<std::uint64_t>(r)});
        const EdgeOracle oracle(mp, derive_stream_seed(rs, kEdgeStreamTag));
        CostStream costs(derive_stream_seed(rs, cost_tag));
        const auto start = pick_start_vertex(derive_stream_seed(rs, kStartStreamTag), mp.n);
        const SearchOutcome out = mode == Mode::Baseline
                                      ? run_baseline(oracle, mp, costs, start)
                                      : run_agd(oracle, mp, costs, start);
        s.steps[r] = static_cast<double>(out.steps);
        s.visits[r] = static_cast<double>(out.visits);
        s.explorations[r] = static_cast<double>(out.explorations);
    });
    return s;
}

struct RecordSamples {
    std::vector<double> steps, records;
};

RecordSamples run_record_samples(Mode mode, std::int64_t window, std::int64_t reps,
                                 std::uint64_t master_seed, int threads) {
    RecordSamples s;
    s.steps.resize(static_cast<std::size_t>(reps));
    s.records.resize(static_cast<std::size_t>(reps));
    const std::uint64_t cost_tag = mode_cost_tag(mode);
    parallel_for_reps(reps, threads, [&](std::int64_t r) {
        const std::uint64_t rs = replication_seed({master_seed, static_cast<std::uint64_t>(r)});
        CostStream stream(derive_stream_seed(rs, cost_tag));
        RecordOutcome out;
        switch (mode) {
            case Mode::RecordDirect: out = run_record_direct(window, stream); break;
            case Mode::RecordJump: out = run_record_jump(window, stream); break;
            default: out = run_poisson_representation(window, stream); break;
        }
        s.steps[r] = static_cast<double>(out.steps);
        s.records[r] = static_cast<double>(out.records);
    });
    return s;
}

StatLine make_line(std::string name, std::span<const double> values) {
    StatLine line;
    line.name = std::move(name);
    line.stats = summarize(values);
    return line;
}

void attach_reference(StatLine& line, double reference, std::string formula) {
    line.reference = reference;
    line.reference_formula = std::move(formula);
    if (reference != 0.0) line.ratio = line.stats.mean / reference;
}

std::vector<DecileRow> decile_table(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<DecileRow> rows;
    for (int d = 1; d <= 9; ++d) {
        DecileRow row;
        row.q = d / 10.0;
        row.explored_agd = quantile_sorted(a, row.q);
        row.explored_baseline = quantile_sorted(b, row.q);
        rows.push_back(row);
    }
    return rows;
}

} // namespace

Mode parse_mode(const std::string& name) {
    if (name == "agd") return Mode::Agd;
    if (name == "gd") return Mode::Gd;
    if (name == "baseline") return Mode::Baseline;
    if (name == "record-direct") return Mode::RecordDirect;
    if (name == "record-jump") return Mode::RecordJump;
    if (name == "poisson-rep") return Mode::PoissonRep;
    if (name == "coupled") return Mode::Coupled;
    if (name == "dominance") return Mode::Dominance;
    if (name == "sweep") return Mode::Sweep;
    if (name == "verify-analytics") return Mode::VerifyAnalytics;
    throw std::invalid_argument("unknown mode: " + name);
}

std::string mode_name(Mode mode) {
    switch (mode) {
        case Mode::Agd: return "agd";
        case Mode::Gd: return "gd";
        case Mode::Baseline: return "baseline";
        case Mode::RecordDirect: return "record-direct";
        case Mode::RecordJump: return "record-jump";
        case Mode::PoissonRep: return "poisson-rep";
        case Mode::Coupled: return "coupled";
        case Mode::Dominance: return "dominance";
        case Mode::Sweep: return "sweep";
        case Mode::VerifyAnalytics: return "verify-analytics";
    }
    return "unknown";
}

std::vector<StatLine> coupled_compare(const ModelParams& params, std::int64_t replications,
                                      std::uint64_t master_seed, int threads) {
    const std::size_t reps = static_cast<std::size_t>(replications);
    std::vector<double> step_rate_gap(reps), explored_gap(reps), explored_gap_scaled(reps),
        step_gap_over_beta(reps);
    const double scale = std::pow(static_cast<double>(params.n), 1.0 - params.alpha);
    const std::uint64_t cost_tag = mode_cost_tag(Mode::Coupled);

    parallel_for_reps(replications, threads, [&](std::int64_t r) {
        const std::uint64_t rs = replication_seed({master_seed, static_cast<std::uint64_t>(r)});
        const std::uint64_t stream_seed = derive_stream_seed(rs, cost_tag);
        const EdgeOracle oracle(params, derive_stream_seed(rs, kEdgeStreamTag));
        CostStream search_stream(stream_seed);
        const auto start = pick_start_vertex(derive_stream_seed(rs, kStartStreamTag), params.n);
        const SearchOutcome search = run_agd(oracle, params, search_stream, start);

        CostStream record_stream(stream_seed); // the identical value sequence
        const RecordOutcome record = run_record_direct(params.window, record_stream);

        const double s = static_cast<double>(search.steps);
        const double e = static_cast<double>(search.explorations);
        const double rs_steps = static_cast<double>(record.steps);
        step_rate_gap[r] = std::abs(s / scale - rs_steps / (params.beta * scale));
        explored_gap[r] = std::abs(e - rs_steps);
        explored_gap_scaled[r] = explored_gap[r] / scale;
        step_gap_over_beta[r] = std::abs(s - rs_steps / params.beta);
    });

    std::vector<StatLine> lines;
    lines.push_back(make_line("step_rate_gap", step_rate_gap));
    lines.push_back(make_line("explored_gap", explored_gap));
    lines.push_back(make_line("explored_gap_scaled", explored_gap_scaled));
    lines.push_back(make_line("step_gap_over_beta", step_gap_over_beta));
    return lines;
}

DominanceSummary dominance_check(const ModelParams& params, std::int64_t replications,
                                 std::uint64_t master_seed, int threads) {
    const std::size_t reps = static_cast<std::size_t>(replications);
    std::vector<double> explored_a(reps), explored_b(reps);
    const std::uint64_t cost_tag = mode_cost_tag(Mode::Dominance);

    parallel_for_reps(replications, threads, [&](std::int64_t r) {
        const std::uint64_t rs = replication_seed({master_seed, static_cast<std::uint64_t>(r)});
        const std::uint64_t arm_a = derive_stream_seed(rs, kArmOneTag);
        const std::uint64_t arm_b = derive_stream_seed(rs, kArmTwoTag);

        const EdgeOracle ga(params, derive_stream_seed(arm_a, kEdgeStreamTag));
        CostStream ca(derive_stream_seed(arm_a, cost_tag));
        const auto sa = pick_start_vertex(derive_stream_seed(arm_a, kStartStreamTag), params.n);
        explored_a[r] = static_cast<double>(run_agd(ga, params, ca, sa).explorations);

        const EdgeOracle gb(params, derive_stream_seed(arm_b, kEdgeStreamTag));
        CostStream cb(derive_stream_seed(arm_b, cost_tag));
        const auto sb = pick_start_vertex(derive_stream_seed(arm_b, kStartStreamTag), params.n);
        explored_b[r] = static_cast<double>(run_baseline(gb, params, cb, sb).explorations);
    });

    DominanceSummary out;
    out.explored_agd = summarize(explored_a);
    out.explored_baseline = summarize(explored_b);
    const double n = static_cast<double>(replications);
    out.pooled_se = std::sqrt(out.explored_agd.variance / n + out.explored_baseline.variance / n);
    out.mean_dominance_pass =
        out.explored_agd.mean <= out.explored_baseline.mean + 3.0 * out.pooled_se;
    out.deciles = decile_table(explored_a, explored_b);
    out.ks_baseline_above_agd = ks_two_sample(std::move(explored_b), std::move(explored_a)).a_above_b;
    return out;
}

std::vector<SweepRow> convergence_sweep(const std::vector<std::int64_t>& n_list, double lambda,
                                        double alpha, double beta, std::int64_t replications,
                                        std::uint64_t master_seed, int threads) {
    if (n_list.empty()) throw std::invalid_argument("convergence_sweep: empty n list");
    if (!std::is_sorted(n_list.begin(), n_list.end()))
        throw std::invalid_argument("convergence_sweep: n list must be ascending");
    std::vector<SweepRow> rows;
    for (std::int64_t n : n_list) {
        const ModelParams mp = derive_params(n, lambda, alpha, beta);
        const std::uint64_t seed_n =
            derive_stream_seed(master_seed, static_cast<std::uint64_t>(n));
        const SearchSamples s =
            run_search_samples(Mode::Agd, mp, replications, seed_n, threads, kDefaultExplicitCap);
        const SummaryStats stats = summarize(s.explorations);
        SweepRow row;
        row.n = n;
        row.window = mp.window;
        row.mean_explorations = stats.mean;
        row.ref_exact = record_mean(mp.window);
        row.ref_asym = asymptotic_means(mp).mean_explorations;
        row.ratio_exact = stats.mean / row.ref_exact;
        row.ratio_asym = stats.mean / row.ref_asym;
        row.ci95 = stats.ci95_halfwidth;
        rows.push_back(row);
    }
    return rows;
}

std::vector<CheckItem> verify_analytics(const std::vector<std::int64_t>& windows,
                                        const QuadratureSpec& spec) {
    std::vector<CheckItem> items;

    for (std::int64_t a : windows) {
        if (a < 2) throw std::invalid_argument("verify_analytics: windows must be >= 2");
        double weighted = static_cast<double>(a);
        for (std::int64_t i = 1; i < a; ++i) {
            weighted += static_cast<double>(i) * class_count_mean(i, a, spec);
        }
        const double ref = record_mean(a);
        CheckItem item;
        item.name = "campbell-consistency A=" + std::to_string(a);
        item.measured = std::abs(weighted - ref) / ref;
        item.bound = 1e-6;
        item.pass = item.measured < item.bound;
        items.push_back(item);
    }

    {
        CheckItem agree{"survival-agreement j<=5 k<=50", false, 0.0, 1e-8};
        CheckItem mono{"survival-monotone", false, 0.0, 0.0};
        CheckItem range{"survival-range", false, 0.0, 1e-12};
        double worst = 0.0;
        double mono_violation = 0.0;
        double range_violation = 0.0;
        std::vector<std::vector<double>> grid(6, std::vector<double>(51, 0.0));
        for (std::int64_t j = 1; j <= 5; ++j) {
            for (std::int64_t k = 0; k <= 50; ++k) {
                const double q = residence_survival(j, k, spec);
                grid[j][k] = q;
                worst = std::max(worst, std::abs(q - residence_survival_alternating(j, k)));
                range_violation = std::max({range_violation, -q, q - 1.0});
            }
        }
        for (std::int64_t j = 1; j <= 5; ++j) {
            for (std::int64_t k = 1; k <= 50; ++k) {
                mono_violation = std::max(mono_violation, grid[j][k] - grid[j][k - 1]);
            }
        }
        for (std::int64_t j = 2; j <= 5; ++j) {
            for (std::int64_t k = 0; k <= 50; ++k) {
                mono_violation = std::max(mono_violation, grid[j - 1][k] - grid[j][k]);
            }
        }
        agree.measured = worst;
        agree.pass = worst < agree.bound;
        mono.measured = mono_violation;
        mono.bound = 1e-12;
        mono.pass = mono_violation <= mono.bound;
        range.measured = range_violation;
        range.pass = range_violation <= range.bound;
        items.push_back(agree);
        items.push_back(mono);
        items.push_back(range);
    }

    {
        CheckItem ordered{"variance-bounds-ordered A in [2,10000]", false, 0.0, 0.0};
        std::int64_t violations = 0;
        for (std::int64_t a = 2; a <= 10000; ++a) {
            const VarianceBounds vb = record_variance_bounds(a);
            if (!(vb.lower <= vb.upper)) ++violations;
        }
        ordered.measured = static_cast<double>(violations);
        ordered.pass = violations == 0;
        items.push_back(ordered);
    }

    for (std::int64_t a : windows) {
        CheckItem bounded{"class-count <= 1/i A=" + std::to_string(a), false, 0.0, 1e-9};
        double excess = 0.0;
        const std::int64_t top = std::min<std::int64_t>(a - 1, 12);
        for (std::int64_t i = 1; i <= top; ++i) {
            excess = std::max(excess,
                              class_count_mean(i, a, spec) - 1.0 / static_cast<double>(i));
        }
        bounded.measured = excess;
        bounded.pass = excess <= bounded.bound;
        items.push_back(bounded);
    }

    return items;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    if (config.replications < 1)
        throw std::invalid_argument("config: replications must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();

    ExperimentReport report;
    report.config = config;

    switch (config.mode) {
        case Mode::Agd:
        case Mode::Gd:
        case Mode::Baseline: {
            const ModelParams mp = require_params(config);
            report.params = mp;
            const SearchSamples s =
                run_search_samples(config.mode, mp, config.replications, config.master_seed,
                                   config.threads, config.explicit_cap);
            report.analytics = analytic_report(mp);
            StatLine steps = make_line("steps", s.steps);
            StatLine visits = make_line("visits", s.visits);
            StatLine explorations = make_line("explorations", s.explorations);
            if (config.mode == Mode::Agd) {
                attach_reference(explorations, report.analytics->record_mean,
                                 "exp(harmonic(window-1))");
                attach_reference(steps, report.analytics->asym_mean_steps,
                                 "(lambda/beta) exp(gamma) n^(1-alpha)");
            }
            report.stats = {steps, visits, explorations};
            break;
        }
        case Mode::RecordDirect:
        case Mode::RecordJump:
        case Mode::PoissonRep: {
            const std::int64_t window = require_window(config);
            report.config.window = window; // echo the effective value when derived from n
            const RecordSamples s = run_record_samples(config.mode, window, config.replications,
                                                       config.master_seed, config.threads);
            report.analytics = analytic_report_for_window(window);
            StatLine steps = make_line("steps", s.steps);
            attach_reference(steps, report.analytics->record_mean, "exp(harmonic(window-1))");
            StatLine records = make_line("records", s.records);
            report.stats = {steps, records};
            break;
        }
        case Mode::Coupled: {
            const ModelParams mp = require_params(config);
            report.params = mp;
            report.analytics = analytic_report(mp);
            report.stats = coupled_compare(mp, config.replications, config.master_seed,
                                           config.threads);
            break;
        }
        case Mode::Dominance: {
            const ModelParams mp = require_params(config);
            report.params = mp;
            report.dominance = dominance_check(mp, config.replications, config.master_seed,
                                               config.threads);
            StatLine agd_line;
            agd_line.name = "explorations_agd";
            agd_line.stats = report.dominance->explored_agd;
            StatLine base_line;
            base_line.name = "explorations_baseline";
            base_line.stats = report.dominance->explored_baseline;
            report.stats = {agd_line, base_line};
            report.checks_passed = report.dominance->mean_dominance_pass;
            break;
        }
        case Mode::Sweep: {
            if (config.n_list.empty())
                throw std::invalid_argument("config: sweep requires n_list");
            report.sweep =
                convergence_sweep(config.n_list, config.lambda, config.alpha, config.beta,
                                  config.replications, config.master_seed, config.threads);
            break;
        }
        case Mode::VerifyAnalytics: {
            std::vector<std::int64_t> windows = config.window_list;
            if (windows.empty()) windows = {2, 5, 10, 50};
            report.checks = verify_analytics(windows, config.quadrature);
            report.checks_passed = std::all_of(report.checks.begin(), report.checks.end(),
                                               [](const CheckItem& c) { return c.pass; });
            break;
        }
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_report_files(report);
    return report;
}

} // namespace agdsim
