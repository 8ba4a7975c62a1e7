#ifndef AGDSIM_HARNESS_HPP
#define AGDSIM_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agdsim/analytics.hpp"
#include "agdsim/graph.hpp"
#include "agdsim/model.hpp"
#include "agdsim/quadrature.hpp"
#include "agdsim/stats.hpp"

namespace agdsim {

enum class Mode {
    Agd,
    Gd,
    Baseline,
    RecordDirect,
    RecordJump,
    PoissonRep,
    Coupled,
    Dominance,
    Sweep,
    VerifyAnalytics,
};

/// Mode names as they appear on the command line and in files:
/// agd | gd | baseline | record-direct | record-jump | poisson-rep |
/// coupled | dominance | sweep | verify-analytics
Mode parse_mode(const std::string& name);
std::string mode_name(Mode mode);

struct ExperimentConfig {
    Mode mode = Mode::Agd;
    std::optional<std::int64_t> n;
    double lambda = 1.0;
    double alpha = 0.5;
    double beta = 1.0;
    /// Explicit record window A; derived from (n, lambda, alpha) when absent.
    std::optional<std::int64_t> window;
    std::int64_t replications = 1;
    std::uint64_t master_seed = 1;
    /// Base output path; "<out>.csv" and "<out>.json" are written when set.
    std::string out_path;
    int threads = 0; // 0 = hardware concurrency
    QuadratureSpec quadrature;
    std::vector<std::int64_t> n_list;      // sweep mode
    std::vector<std::int64_t> window_list; // verify-analytics mode
    std::int64_t explicit_cap = kDefaultExplicitCap;
};

/// One reported statistic with an optional analytic reference.
struct StatLine {
    std::string name;
    SummaryStats stats;
    std::optional<double> reference;
    std::string reference_formula;
    std::optional<double> ratio; // mean / reference
};

struct SweepRow {
    std::int64_t n = 0;
    std::int64_t window = 0;
    double mean_explorations = 0.0;
    double ref_exact = 0.0;
    double ref_asym = 0.0;
    double ratio_exact = 0.0;
    double ratio_asym = 0.0;
    double ci95 = 0.0;
};

struct DecileRow {
    double q = 0.0;
    double explored_agd = 0.0;
    double explored_baseline = 0.0;
};

struct DominanceSummary {
    SummaryStats explored_agd;
    SummaryStats explored_baseline;
    double pooled_se = 0.0;
    bool mean_dominance_pass = false; // mean_agd <= mean_baseline + 3*pooled_se
    std::vector<DecileRow> deciles;
    /// sup(F_baseline - F_agd): informational, no pass/fail attached.
    double ks_baseline_above_agd = 0.0;
};

struct CheckItem {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double bound = 0.0;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::optional<ModelParams> params; // filled for graph-backed modes
    std::string rng_name = kRngName;
    double wall_seconds = 0.0;
    std::vector<StatLine> stats;
    std::optional<AnalyticReport> analytics;
    std::vector<SweepRow> sweep;
    std::optional<DominanceSummary> dominance;
    std::vector<CheckItem> checks;
    bool checks_passed = true;
};

/// Runs the configured experiment. Deterministic in (config, master_seed):
/// every replication owns streams derived from its index, results are
/// stored per replication and aggregated with compensated sums, so worker
/// count never changes the report. Writes <out>.csv and <out>.json
/// atomically when out_path is set. Throws std::invalid_argument on
/// configuration errors.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Shared-stream comparison of the block search against the record
/// process (window = params.window) consuming the identical stream.
/// Emits gap statistics: |S/n^(1-a) - S~/(b n^(1-a))|, |E - S~|,
/// |E - S~|/n^(1-a) and |S - S~/b|.
std::vector<StatLine> coupled_compare(const ModelParams& params, std::int64_t replications,
                                      std::uint64_t master_seed, int threads = 0);

/// Independent-instance comparison of cheapest-improvement vs
/// first-improvement block search.
DominanceSummary dominance_check(const ModelParams& params, std::int64_t replications,
                                 std::uint64_t master_seed, int threads = 0);

/// Mean explorations across graph sizes with exact and asymptotic
/// references.
std::vector<SweepRow> convergence_sweep(const std::vector<std::int64_t>& n_list, double lambda,
                                        double alpha, double beta, std::int64_t replications,
                                        std::uint64_t master_seed, int threads = 0);

/// Analytic identity suite: Campbell-type consistency, survival
/// quadrature vs alternating oracle, monotonicity, probability range,
/// variance-bound ordering, class-count upper bound.
std::vector<CheckItem> verify_analytics(const std::vector<std::int64_t>& windows,
                                        const QuadratureSpec& spec = {});

// --- report files -------------------------------------------------------

/// Writes via a temp file in the target directory plus rename.
void atomic_write_file(const std::string& path, const std::string& content);

std::string report_to_json(const ExperimentReport& report);
std::string report_to_csv(const ExperimentReport& report);
void write_report_files(const ExperimentReport& report); // no-op when out_path empty

/// Reads a JSON file mirroring ExperimentConfig (keys: mode, n, lambda,
/// alpha, beta, window, replications, seed, out, threads, n_list,
/// window_list, quadrature{abs_tol, rel_tol, max_subdivisions}).
ExperimentConfig load_config_json(const std::string& path);

/// Parses a sweep CSV back into rows (round-trip checked in tests).
std::vector<SweepRow> parse_sweep_csv(const std::string& content);

/// Resolves the effective output base path: explicit paths win, otherwise
/// relative ones are placed under $AGDSIM_OUT_DIR when that is set.
std::string resolve_out_path(const std::string& out_path);

} // namespace agdsim

#endif // AGDSIM_HARNESS_HPP
