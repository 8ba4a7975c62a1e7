#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "agdsim/harness.hpp"

namespace agdsim {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ordered_json config_to_json(const ExperimentConfig& cfg) {
    ordered_json j;
    j["mode"] = mode_name(cfg.mode);
    if (cfg.n) j["n"] = *cfg.n;
    j["lambda"] = cfg.lambda;
    j["alpha"] = cfg.alpha;
    j["beta"] = cfg.beta;
    if (cfg.window) j["window"] = *cfg.window;
    j["replications"] = cfg.replications;
    j["seed"] = cfg.master_seed;
    j["threads"] = cfg.threads;
    if (!cfg.n_list.empty()) j["n_list"] = cfg.n_list;
    if (!cfg.window_list.empty()) j["window_list"] = cfg.window_list;
    j["quadrature"] = {{"abs_tol", cfg.quadrature.abs_tol},
                       {"rel_tol", cfg.quadrature.rel_tol},
                       {"max_subdivisions", cfg.quadrature.max_subdivisions}};
    if (!cfg.out_path.empty()) j["out"] = cfg.out_path;
    return j;
}

ordered_json stat_line_to_json(const StatLine& line) {
    ordered_json j;
    j["mean"] = line.stats.mean;
    j["variance"] = line.stats.variance;
    j["ci95_halfwidth"] = line.stats.ci95_halfwidth;
    j["count"] = line.stats.count;
    if (line.reference) {
        j["reference"] = *line.reference;
        j["reference_formula"] = line.reference_formula;
    }
    if (line.ratio) j["ratio"] = *line.ratio;
    return j;
}

void append_csv_value(std::ostringstream& os, const std::optional<double>& v) {
    if (v) os << format_double(*v);
}

} // namespace

void atomic_write_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("atomic_write_file: cannot open " + tmp.string());
        out << content;
        if (!out.good()) throw std::runtime_error("atomic_write_file: write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string report_to_json(const ExperimentReport& report) {
    ordered_json j;
    j["config"] = config_to_json(report.config);
    if (report.params) {
        j["derived"] = {{"p", report.params->p},
                        {"block_size", report.params->block_size},
                        {"window", report.params->window}};
    }
    j["rng"] = report.rng_name;
    j["replications"] = report.config.replications;

    if (!report.stats.empty()) {
        ordered_json stats;
        for (const StatLine& line : report.stats) stats[line.name] = stat_line_to_json(line);
        j["statistics"] = stats;
    }
    if (report.analytics) {
        const AnalyticReport& a = *report.analytics;
        ordered_json an;
        an["harmonic"] = a.harmonic_value;
        an["record_mean"] = a.record_mean;
        an["var_lower"] = a.var_lower;
        an["var_upper"] = a.var_upper;
        if (a.asym_mean_steps != 0.0) {
            an["asym_mean_steps"] = a.asym_mean_steps;
            an["asym_mean_explorations"] = a.asym_mean_explorations;
        }
        j["analytics"] = an;
    }
    if (!report.sweep.empty()) {
        ordered_json rows = ordered_json::array();
        for (const SweepRow& r : report.sweep) {
            rows.push_back({{"n", r.n},
                            {"A", r.window},
                            {"mean_E", r.mean_explorations},
                            {"ref_exact", r.ref_exact},
                            {"ref_asym", r.ref_asym},
                            {"ratio_exact", r.ratio_exact},
                            {"ratio_asym", r.ratio_asym},
                            {"ci", r.ci95}});
        }
        j["sweep"] = rows;
    }
    if (report.dominance) {
        const DominanceSummary& d = *report.dominance;
        ordered_json dj;
        dj["mean_explorations_agd"] = d.explored_agd.mean;
        dj["mean_explorations_baseline"] = d.explored_baseline.mean;
        dj["pooled_se"] = d.pooled_se;
        dj["mean_dominance_pass"] = d.mean_dominance_pass;
        dj["ks_baseline_above_agd"] = d.ks_baseline_above_agd;
        ordered_json deciles = ordered_json::array();
        for (const DecileRow& row : d.deciles) {
            deciles.push_back({{"q", row.q},
                               {"explorations_agd", row.explored_agd},
                               {"explorations_baseline", row.explored_baseline}});
        }
        dj["deciles"] = deciles;
        j["dominance"] = dj;
    }
    if (!report.checks.empty()) {
        ordered_json checks = ordered_json::array();
        for (const CheckItem& c : report.checks) {
            checks.push_back(
                {{"item", c.name}, {"pass", c.pass}, {"measured", c.measured}, {"bound", c.bound}});
        }
        j["checks"] = checks;
        j["checks_passed"] = report.checks_passed;
    }
    j["wall_seconds"] = report.wall_seconds;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const ExperimentReport& report) {
    std::ostringstream os;
    const ExperimentConfig& cfg = report.config;
    const Mode mode = cfg.mode;

    if (mode == Mode::Sweep) {
        os << "n,A,mean_E,ref_exact,ref_asym,ratio_exact,ratio_asym,ci\n";
        for (const SweepRow& r : report.sweep) {
            os << r.n << ',' << r.window << ',' << format_double(r.mean_explorations) << ','
               << format_double(r.ref_exact) << ',' << format_double(r.ref_asym) << ','
               << format_double(r.ratio_exact) << ',' << format_double(r.ratio_asym) << ','
               << format_double(r.ci95) << '\n';
        }
        return os.str();
    }

    if (mode == Mode::VerifyAnalytics) {
        os << "item,pass,measured,bound\n";
        for (const CheckItem& c : report.checks) {
            os << c.name << ',' << (c.pass ? 1 : 0) << ',' << format_double(c.measured) << ','
               << format_double(c.bound) << '\n';
        }
        return os.str();
    }

    // One row per configuration; the column set depends on the mode family.
    std::ostringstream header, row;
    header << "mode,n,lambda,alpha,beta,p,block_size,window,replications,seed";
    row << mode_name(mode) << ',';
    if (report.params) row << report.params->n;
    row << ',' << format_double(cfg.lambda) << ',' << format_double(cfg.alpha) << ','
        << format_double(cfg.beta) << ',';
    if (report.params) row << format_double(report.params->p);
    row << ',';
    if (report.params) row << report.params->block_size;
    row << ',';
    if (report.params) {
        row << report.params->window;
    } else if (report.analytics) {
        row << (cfg.window ? *cfg.window : 0);
    }
    row << ',' << cfg.replications << ',' << cfg.master_seed;

    for (const StatLine& line : report.stats) {
        header << ",mean_" << line.name << ",var_" << line.name << ",ci95_" << line.name;
        row << ',' << format_double(line.stats.mean) << ',' << format_double(line.stats.variance)
            << ',' << format_double(line.stats.ci95_halfwidth);
        if (line.reference) {
            header << ",ref_" << line.name << ",ratio_" << line.name;
            row << ',';
            append_csv_value(row, line.reference);
            row << ',';
            append_csv_value(row, line.ratio);
        }
    }
    if (report.analytics && (mode == Mode::RecordDirect || mode == Mode::RecordJump ||
                             mode == Mode::PoissonRep)) {
        header << ",var_lower,var_upper";
        row << ',' << format_double(report.analytics->var_lower) << ','
            << format_double(report.analytics->var_upper);
    }
    if (report.dominance) {
        header << ",pooled_se,mean_dominance_pass,ks_baseline_above_agd";
        row << ',' << format_double(report.dominance->pooled_se) << ','
            << (report.dominance->mean_dominance_pass ? 1 : 0) << ','
            << format_double(report.dominance->ks_baseline_above_agd);
    }
    os << header.str() << '\n' << row.str() << '\n';
    return os.str();
}

void write_report_files(const ExperimentReport& report) {
    if (report.config.out_path.empty()) return;
    const std::string base = resolve_out_path(report.config.out_path);
    atomic_write_file(base + ".json", report_to_json(report));
    atomic_write_file(base + ".csv", report_to_csv(report));
}

ExperimentConfig load_config_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config file not readable: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config file is not valid JSON: " + std::string(e.what()));
    }
    ExperimentConfig cfg;
    if (j.contains("mode")) cfg.mode = parse_mode(j.at("mode").get<std::string>());
    if (j.contains("n")) cfg.n = j.at("n").get<std::int64_t>();
    if (j.contains("lambda")) cfg.lambda = j.at("lambda").get<double>();
    if (j.contains("alpha")) cfg.alpha = j.at("alpha").get<double>();
    if (j.contains("beta")) cfg.beta = j.at("beta").get<double>();
    if (j.contains("window")) cfg.window = j.at("window").get<std::int64_t>();
    if (j.contains("A")) cfg.window = j.at("A").get<std::int64_t>();
    if (j.contains("replications")) cfg.replications = j.at("replications").get<std::int64_t>();
    if (j.contains("reps")) cfg.replications = j.at("reps").get<std::int64_t>();
    if (j.contains("seed")) cfg.master_seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("out")) cfg.out_path = j.at("out").get<std::string>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    if (j.contains("n_list")) cfg.n_list = j.at("n_list").get<std::vector<std::int64_t>>();
    if (j.contains("window_list"))
        cfg.window_list = j.at("window_list").get<std::vector<std::int64_t>>();
    if (j.contains("a_list"))
        cfg.window_list = j.at("a_list").get<std::vector<std::int64_t>>();
    if (j.contains("quadrature")) {
        const auto& q = j.at("quadrature");
        if (q.contains("abs_tol")) cfg.quadrature.abs_tol = q.at("abs_tol").get<double>();
        if (q.contains("rel_tol")) cfg.quadrature.rel_tol = q.at("rel_tol").get<double>();
        if (q.contains("max_subdivisions"))
            cfg.quadrature.max_subdivisions = q.at("max_subdivisions").get<int>();
    }
    if (j.contains("explicit_cap")) cfg.explicit_cap = j.at("explicit_cap").get<std::int64_t>();
    return cfg;
}

std::vector<SweepRow> parse_sweep_csv(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    if (!std::getline(in, line) || line != "n,A,mean_E,ref_exact,ref_asym,ratio_exact,ratio_asym,ci")
        throw std::invalid_argument("parse_sweep_csv: unexpected header");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        SweepRow r;
        auto next = [&ls, &field] {
            if (!std::getline(ls, field, ',')) throw std::invalid_argument("parse_sweep_csv: short row");
            return field;
        };
        r.n = std::stoll(next());
        r.window = std::stoll(next());
        r.mean_explorations = std::stod(next());
        r.ref_exact = std::stod(next());
        r.ref_asym = std::stod(next());
        r.ratio_exact = std::stod(next());
        r.ratio_asym = std::stod(next());
        r.ci95 = std::stod(next());
        rows.push_back(r);
    }
    return rows;
}

std::string resolve_out_path(const std::string& out_path) {
    namespace fs = std::filesystem;
    if (out_path.empty()) return out_path;
    const fs::path p(out_path);
    if (p.is_absolute()) return out_path;
    const char* dir = std::getenv("AGDSIM_OUT_DIR");
    if (dir == nullptr || *dir == '\0') return out_path;
    return (fs::path(dir) / p).string();
}

} // namespace agdsim
