#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degrank/ba.hpp"
#include "degrank/graph.hpp"
#include "degrank/netprobe.hpp"
#include "degrank/rank_model.hpp"

namespace degrank {

enum class ParamsSource { Census, Sampled };

struct BaSpec {
    std::size_t n = 0;
    std::size_t m = 0;
};

struct ExperimentConfig {
    // exactly one graph source
    std::optional<std::filesystem::path> graph_file;
    std::optional<BaSpec> ba;

    // one trial per seed; for generated graphs the seed drives growth, and in
    // sampled mode a derived substream drives the estimators
    std::vector<std::uint64_t> trial_seeds;

    ParamsSource params_source = ParamsSource::Census;
    std::size_t sample_size = 0; // sampled mode only

    VarianceMode variance_mode = VarianceMode::Exact;
    double band_sigmas = 2.0;
    std::uint32_t degree_floor_offset = 15; // high-degree cohort: deg >= k_min + offset

    void validate() const;
};

struct NodeRow {
    std::uint64_t node = 0;       // original label
    std::uint32_t degree = 0;
    std::uint32_t actual_rank = 0; // strict sorted position (ties by node id)
    std::uint32_t class_rank = 0;  // competition rank shared by the degree class
    double expected_rank = 0.0;
    double band_low = 0.0;
    double band_high = 0.0;
};

struct ErrorStats {
    double avg_abs_error = 0.0;
    double std_error = 0.0; // population standard deviation of |a - e|
};

// Mean absolute difference and its population standard deviation.
ErrorStats error_stats(std::span<const double> actual, std::span<const double> expected);

struct CoverageResult {
    double fraction = 1.0;
    bool empty_cohort = false;
};

// Fraction of nodes with degree >= degree_floor whose degree-class rank lies
// inside [band_low, band_high]. An empty cohort counts as full coverage and
// is flagged.
CoverageResult band_coverage(std::span<const NodeRow> rows, std::uint32_t degree_floor);

struct TrialResult {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t ba_m = 0; // 0 when the graph came from a file
    ParamEstimate params;
    double gamma = 0.0;
    std::uint32_t degree_floor = 0;
    std::vector<NodeRow> rows; // node order
    double avg_abs_error = 0.0;
    double std_error = 0.0;
    CoverageResult coverage_all;
    CoverageResult coverage_highdeg;
    std::size_t p_clamp_count = 0;
    std::size_t variance_clamp_count = 0;
};

struct ExperimentReport {
    VarianceMode variance_mode = VarianceMode::Exact;
    double band_sigmas = 2.0;
    ParamsSource params_source = ParamsSource::Census;
    std::vector<TrialResult> trials;
};

// Runs one trial per seed: builds or loads the graph, obtains parameters
// (census or sampled), computes both rank tables and a model estimate per
// node, and aggregates the error and coverage statistics. Deterministic in
// the config.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

// Writes out_dir/nodes.csv (per-node rows of the first trial, sorted by
// actual rank) and out_dir/summary.csv (one row per trial). Reals carry six
// significant digits. Refuses an empty report.
void emit_csv(const ExperimentReport& report, const std::filesystem::path& out_dir);

struct Table1Row {
    std::size_t n = 0;
    std::size_t trials = 0;
    double mean_avg_abs_error = 0.0;
    double mean_std_error = 0.0;
    double error_ratio = 0.0; // mean_avg_abs_error / n
};

// For each size: generated graphs with the given m over `trials` consecutive
// seeds starting at seed_base, census parameters, aggregated error stats.
std::vector<Table1Row> table1_suite(std::span<const std::size_t> sizes,
                                    std::size_t trials, std::uint64_t seed_base,
                                    std::size_t m = 10);

void emit_table1_csv(std::span<const Table1Row> rows, const std::filesystem::path& file);

// "%.6g" rendering used for all reals in CSV output.
std::string format_g6(double value);

} // namespace degrank
