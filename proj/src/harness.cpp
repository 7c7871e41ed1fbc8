#include "degrank/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "degrank/errors.hpp"
#include "degrank/rng.hpp"

namespace degrank {

void ExperimentConfig::validate() const {
    if (graph_file.has_value() == ba.has_value()) {
        throw config_error("experiment: exactly one of graph file / generated graph required");
    }
    if (ba && (ba->n < 2 || ba->m < 1)) {
        throw config_error("experiment: generated graph needs n >= 2 and m >= 1");
    }
    if (trial_seeds.empty()) {
        throw config_error("experiment: at least one trial seed required");
    }
    if (params_source == ParamsSource::Sampled && sample_size < 2) {
        throw config_error("experiment: sampled mode needs a sample size >= 2");
    }
    if (!(band_sigmas > 0.0)) {
        throw config_error("experiment: band width must be positive");
    }
}

ErrorStats error_stats(std::span<const double> actual, std::span<const double> expected) {
    if (actual.size() != expected.size()) {
        throw std::invalid_argument("error_stats: length mismatch");
    }
    if (actual.empty()) {
        throw std::invalid_argument("error_stats: empty input");
    }
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const double d = std::abs(actual[i] - expected[i]);
        sum += d;
        sum_sq += d * d;
    }
    const double inv_n = 1.0 / static_cast<double>(actual.size());
    ErrorStats stats;
    stats.avg_abs_error = sum * inv_n;
    stats.std_error = std::sqrt(std::max(0.0, sum_sq * inv_n -
                                              stats.avg_abs_error * stats.avg_abs_error));
    return stats;
}

CoverageResult band_coverage(std::span<const NodeRow> rows, std::uint32_t degree_floor) {
    if (rows.empty()) {
        throw std::invalid_argument("band_coverage: no rows");
    }
    std::size_t cohort = 0, inside = 0;
    for (const NodeRow& row : rows) {
        if (row.degree < degree_floor) continue;
        ++cohort;
        const double rank = static_cast<double>(row.class_rank);
        if (rank >= row.band_low && rank <= row.band_high) ++inside;
    }
    if (cohort == 0) {
        return {1.0, true};
    }
    return {static_cast<double>(inside) / static_cast<double>(cohort), false};
}

namespace {

TrialResult run_trial(const ExperimentConfig& cfg, const Graph& g, std::uint64_t seed,
                      std::size_t ba_m) {
    TrialResult trial;
    trial.seed = seed;
    trial.n = g.node_count();
    trial.ba_m = ba_m;

    if (cfg.params_source == ParamsSource::Census) {
        trial.params = census_params(g);
    } else {
        trial.params = sample_params(g, cfg.sample_size, derive_seed(seed, 1));
    }
    const ParamEstimate& pe = trial.params;
    if (pe.insufficient_collisions) {
        throw config_error("experiment: collision sample too small to estimate the "
                           "node count; increase the sample size");
    }
    if (!(pe.d_avg_hat > pe.k_min_hat)) {
        std::ostringstream msg;
        msg << "experiment: degenerate degree spread (d_avg=" << pe.d_avg_hat
            << ", k_min=" << pe.k_min_hat << "); the power-law rank model needs "
            << "degrees above the minimum";
        throw config_error(msg.str());
    }
    const auto model_n = static_cast<std::size_t>(std::llround(pe.n_hat));
    if (model_n < 2) {
        throw config_error("experiment: estimated node count below 2");
    }
    const NetworkParams params = make_params(model_n, pe.k_min_hat, pe.d_avg_hat,
                                             pe.k_max_exact);
    trial.gamma = params.gamma;
    trial.degree_floor = pe.k_min_hat + cfg.degree_floor_offset;

    const RankTable ordinal = ordinal_ranks(g);
    const RankTable classes = exact_ranks(g);

    // estimates are per degree class; sampled parameters can put the floor
    // above real degrees, those evaluate at the floor
    const std::uint32_t floor_degree = params.k_min - 1;
    std::unordered_map<std::uint32_t, RankEstimate> by_degree;
    trial.rows.resize(g.node_count());
    std::vector<double> actual(g.node_count()), expected(g.node_count());
    const auto n_nodes = static_cast<NodeId>(g.node_count());
    for (NodeId u = 0; u < n_nodes; ++u) {
        const std::uint32_t k = g.degree(u);
        const std::uint32_t k_eval = std::max(k, floor_degree);
        auto it = by_degree.find(k_eval);
        if (it == by_degree.end()) {
            it = by_degree.emplace(k_eval, expected_rank(k_eval, params, cfg.variance_mode,
                                                         cfg.band_sigmas)).first;
        }
        const RankEstimate& est = it->second;
        if (k < floor_degree || est.p_clamped) ++trial.p_clamp_count;
        if (est.variance_clamped) ++trial.variance_clamp_count;

        NodeRow& row = trial.rows[u];
        row.node = g.original_id(u);
        row.degree = k;
        row.actual_rank = ordinal.rank[u];
        row.class_rank = classes.rank[u];
        row.expected_rank = est.expected_rank;
        row.band_low = est.band_low;
        row.band_high = est.band_high;
        actual[u] = static_cast<double>(row.actual_rank);
        expected[u] = row.expected_rank;
    }
    const ErrorStats stats = error_stats(actual, expected);
    trial.avg_abs_error = stats.avg_abs_error;
    trial.std_error = stats.std_error;
    trial.coverage_all = band_coverage(trial.rows, 0);
    trial.coverage_highdeg = band_coverage(trial.rows, trial.degree_floor);
    return trial;
}

} // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    ExperimentReport report;
    report.variance_mode = cfg.variance_mode;
    report.band_sigmas = cfg.band_sigmas;
    report.params_source = cfg.params_source;

    std::optional<Graph> loaded;
    if (cfg.graph_file) {
        loaded = load_edge_list_file(*cfg.graph_file).graph;
    }
    report.trials.reserve(cfg.trial_seeds.size());
    for (const std::uint64_t seed : cfg.trial_seeds) {
        if (loaded) {
            report.trials.push_back(run_trial(cfg, *loaded, seed, 0));
        } else {
            BaConfig ba_cfg;
            ba_cfg.n = cfg.ba->n;
            ba_cfg.m = cfg.ba->m;
            ba_cfg.rng_seed = seed;
            const Graph g = ba_generate(ba_cfg);
            report.trials.push_back(run_trial(cfg, g, seed, cfg.ba->m));
        }
    }
    return report;
}

std::string format_g6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

namespace {

std::ofstream open_csv(const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + file.string());
    }
    return out;
}

void finish_csv(std::ofstream& out, const std::filesystem::path& file) {
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + file.string());
    }
}

} // namespace

void emit_csv(const ExperimentReport& report, const std::filesystem::path& out_dir) {
    if (report.trials.empty()) {
        throw std::invalid_argument("emit_csv: nothing to write, report is empty");
    }
    std::filesystem::create_directories(out_dir);

    // scatter data for the first trial
    const auto nodes_path = out_dir / "nodes.csv";
    std::ofstream nodes = open_csv(nodes_path);
    nodes << "node,degree,actual_rank,expected_rank,band_low,band_high\n";
    std::vector<NodeRow> sorted = report.trials.front().rows;
    std::sort(sorted.begin(), sorted.end(), [](const NodeRow& a, const NodeRow& b) {
        if (a.actual_rank != b.actual_rank) return a.actual_rank < b.actual_rank;
        return a.node < b.node;
    });
    for (const NodeRow& row : sorted) {
        nodes << row.node << ',' << row.degree << ',' << row.actual_rank << ','
              << format_g6(row.expected_rank) << ',' << format_g6(row.band_low) << ','
              << format_g6(row.band_high) << '\n';
    }
    finish_csv(nodes, nodes_path);

    const auto summary_path = out_dir / "summary.csv";
    std::ofstream summary = open_csv(summary_path);
    summary << "n,m,seed,gamma,avg_abs_error,std_error,coverage_all,coverage_highdeg\n";
    for (const TrialResult& trial : report.trials) {
        summary << trial.n << ',' << trial.ba_m << ',' << trial.seed << ','
                << format_g6(trial.gamma) << ',' << format_g6(trial.avg_abs_error) << ','
                << format_g6(trial.std_error) << ','
                << format_g6(trial.coverage_all.fraction) << ','
                << format_g6(trial.coverage_highdeg.fraction) << '\n';
    }
    finish_csv(summary, summary_path);
}

std::vector<Table1Row> table1_suite(std::span<const std::size_t> sizes,
                                    std::size_t trials, std::uint64_t seed_base,
                                    std::size_t m) {
    if (sizes.empty()) {
        throw config_error("table1: no sizes given");
    }
    if (trials < 1) {
        throw config_error("table1: need at least one trial");
    }
    std::vector<Table1Row> rows;
    rows.reserve(sizes.size());
    for (const std::size_t n : sizes) {
        ExperimentConfig cfg;
        cfg.ba = BaSpec{n, m};
        cfg.trial_seeds.resize(trials);
        for (std::size_t t = 0; t < trials; ++t) {
            cfg.trial_seeds[t] = seed_base + t;
        }
        const ExperimentReport report = run_experiment(cfg);

        Table1Row row;
        row.n = n;
        row.trials = trials;
        for (const TrialResult& trial : report.trials) {
            row.mean_avg_abs_error += trial.avg_abs_error;
            row.mean_std_error += trial.std_error;
        }
        row.mean_avg_abs_error /= static_cast<double>(trials);
        row.mean_std_error /= static_cast<double>(trials);
        row.error_ratio = row.mean_avg_abs_error / static_cast<double>(n);
        rows.push_back(row);
    }
    return rows;
}

void emit_table1_csv(std::span<const Table1Row> rows, const std::filesystem::path& file) {
    if (rows.empty()) {
        throw std::invalid_argument("emit_table1_csv: nothing to write");
    }
    if (file.has_parent_path()) {
        std::filesystem::create_directories(file.parent_path());
    }
    std::ofstream out = open_csv(file);
    out << "n,trials,mean_avg_abs_error,mean_std_error,error_ratio\n";
    for (const Table1Row& row : rows) {
        out << row.n << ',' << row.trials << ',' << format_g6(row.mean_avg_abs_error)
            << ',' << format_g6(row.mean_std_error) << ',' << format_g6(row.error_ratio)
            << '\n';
    }
    finish_csv(out, file);
}

} // namespace degrank
