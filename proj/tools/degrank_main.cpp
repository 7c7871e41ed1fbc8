// Command line front end: generate / estimate-params / rank / experiment / table1.
// Exit codes: 0 success, 2 invalid configuration or input, 1 runtime failure.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "degrank/ba.hpp"
#include "degrank/errors.hpp"
#include "degrank/graph.hpp"
#include "degrank/harness.hpp"
#include "degrank/netprobe.hpp"
#include "degrank/rank_model.hpp"

namespace {

using namespace degrank;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

VarianceMode parse_variance_mode(const std::string& name) {
    if (name == "exact") return VarianceMode::Exact;
    if (name == "paper") return VarianceMode::Paper;
    throw config_error("unknown variance mode '" + name + "' (expected exact|paper)");
}

const char* variance_mode_name(VarianceMode mode) {
    return mode == VarianceMode::Exact ? "exact" : "paper";
}

BaSpec parse_ba_spec(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma != std::string::npos) {
            const std::size_t n = std::stoull(text.substr(0, comma));
            const std::size_t m = std::stoull(text.substr(comma + 1));
            return {n, m};
        }
    } catch (const std::exception&) {
        // fall through to the config error below
    }
    throw config_error("expected --ba N,M, got '" + text + "'");
}

int cmd_generate(std::size_t nodes, std::size_t m, std::uint64_t seed,
                 std::size_t n0, const std::string& out_path) {
    BaConfig cfg;
    cfg.n = nodes;
    cfg.m = m;
    if (n0 > 0) cfg.n0 = n0;
    cfg.rng_seed = seed;

    const Graph g = ba_generate(cfg);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + out_path);
    }
    save_edge_list(g, out, ba_meta_line(cfg, g.edge_count()));
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + out_path);
    }
    std::cout << "wrote " << g.node_count() << " nodes, " << g.edge_count()
              << " edges to " << out_path << '\n';
    return kExitOk;
}

int cmd_estimate_params(const std::string& graph_path, std::size_t samples,
                        std::uint64_t seed, bool census) {
    const Graph g = load_edge_list_file(graph_path).graph;
    ParamEstimate est;
    if (census) {
        est = census_params(g);
    } else {
        if (samples < 2) {
            throw config_error("estimate-params: --samples must be >= 2 (or use --census)");
        }
        est = sample_params(g, samples, seed);
    }
    std::cout << "n_hat=" << format_g6(est.n_hat)
              << " d_avg_hat=" << format_g6(est.d_avg_hat)
              << " k_min_hat=" << est.k_min_hat
              << " samples=" << est.sample_size
              << " mode=" << (est.census ? "census" : "sampled");
    if (est.insufficient_collisions) {
        std::cout << " insufficient_collisions=1";
    }
    std::cout << '\n';
    return kExitOk;
}

int cmd_rank(std::uint32_t degree, std::size_t n, std::uint32_t k_min, double d_avg,
             const std::string& variance_mode, double band_sigmas) {
    const NetworkParams params = make_params(n, k_min, d_avg);
    if (params.gamma_near_two()) {
        std::cerr << "warning: fitted exponent " << format_g6(params.gamma)
                  << " is close to 2; tail estimates degrade in this regime\n";
    }
    const RankEstimate est = expected_rank(degree, params,
                                           parse_variance_mode(variance_mode),
                                           band_sigmas);
    std::cout << "p=" << format_g6(est.p)
              << " expected_rank=" << format_g6(est.expected_rank)
              << " variance=" << format_g6(est.variance)
              << " band_low=" << format_g6(est.band_low)
              << " band_high=" << format_g6(est.band_high)
              << " gamma=" << format_g6(params.gamma) << '\n';
    return kExitOk;
}

int cmd_experiment(const std::string& graph_path, const std::string& ba_text,
                   const std::vector<std::uint64_t>& seeds, const std::string& out_dir,
                   std::size_t sampled, const std::string& variance_mode,
                   double band_sigmas, std::uint32_t degree_floor_offset) {
    ExperimentConfig cfg;
    if (!graph_path.empty()) cfg.graph_file = graph_path;
    if (!ba_text.empty()) cfg.ba = parse_ba_spec(ba_text);
    cfg.trial_seeds = seeds;
    if (sampled > 0) {
        cfg.params_source = ParamsSource::Sampled;
        cfg.sample_size = sampled;
    }
    cfg.variance_mode = parse_variance_mode(variance_mode);
    cfg.band_sigmas = band_sigmas;
    cfg.degree_floor_offset = degree_floor_offset;

    const ExperimentReport report = run_experiment(cfg);
    emit_csv(report, out_dir);
    for (const TrialResult& trial : report.trials) {
        std::cout << "seed=" << trial.seed << " n=" << trial.n
                  << " gamma=" << format_g6(trial.gamma)
                  << " avg_abs_error=" << format_g6(trial.avg_abs_error)
                  << " std_error=" << format_g6(trial.std_error)
                  << " coverage_all=" << format_g6(trial.coverage_all.fraction)
                  << " coverage_highdeg=" << format_g6(trial.coverage_highdeg.fraction)
                  << '\n';
    }
    std::cout << "wrote " << (std::filesystem::path(out_dir) / "nodes.csv").string()
              << " and " << (std::filesystem::path(out_dir) / "summary.csv").string()
              << " (variance_mode=" << variance_mode_name(report.variance_mode) << ")\n";
    return kExitOk;
}

int cmd_table1(const std::vector<std::size_t>& sizes, std::size_t trials,
               std::uint64_t seed_base, std::size_t m, const std::string& out_dir) {
    const std::vector<Table1Row> rows = table1_suite(sizes, trials, seed_base, m);
    emit_table1_csv(rows, std::filesystem::path(out_dir) / "table1.csv");
    std::cout << "n,trials,mean_avg_abs_error,mean_std_error,error_ratio\n";
    for (const Table1Row& row : rows) {
        std::cout << row.n << ',' << row.trials << ','
                  << format_g6(row.mean_avg_abs_error) << ','
                  << format_g6(row.mean_std_error) << ','
                  << format_g6(row.error_ratio) << '\n';
    }
    std::cout << "wrote " << (std::filesystem::path(out_dir) / "table1.csv").string() << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degree-rank estimation toolkit for scale-free networks"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Generate a preferential-attachment graph");
    std::size_t gen_nodes = 0, gen_m = 0, gen_n0 = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--nodes", gen_nodes, "Target node count")->required();
    gen->add_option("--m", gen_m, "Edges per arriving node")->required();
    gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
    gen->add_option("--n0", gen_n0, "Seed node count (default: m)");
    gen->add_option("--out", gen_out, "Output edge list path")->required();

    // estimate-params
    auto* est = app.add_subcommand("estimate-params",
                                   "Estimate n, d_avg, k_min from a graph by sampling");
    std::string est_graph;
    std::size_t est_samples = 0;
    std::uint64_t est_seed = 1;
    bool est_census = false;
    est->add_option("--graph", est_graph, "Edge list path")->required();
    est->add_option("--samples", est_samples, "Sample size");
    est->add_option("--seed", est_seed, "RNG seed")->capture_default_str();
    est->add_flag("--census", est_census, "Full enumeration instead of sampling");

    // rank
    auto* rank = app.add_subcommand("rank", "Expected rank of a node given its degree");
    std::uint32_t rank_degree = 0, rank_kmin = 0;
    std::size_t rank_n = 0;
    double rank_davg = 0.0, rank_sigmas = 2.0;
    std::string rank_variance = "exact";
    rank->add_option("--degree", rank_degree, "Node degree")->required();
    rank->add_option("--n", rank_n, "Network node count")->required();
    rank->add_option("--kmin", rank_kmin, "Minimum degree")->required();
    rank->add_option("--davg", rank_davg, "Average degree")->required();
    rank->add_option("--variance-mode", rank_variance, "exact|paper")->capture_default_str();
    rank->add_option("--band-sigmas", rank_sigmas, "Band half-width in sigmas")->capture_default_str();

    // experiment
    auto* exp = app.add_subcommand("experiment",
                                   "Compare estimated against actual ranking on a graph");
    std::string exp_graph, exp_ba, exp_out, exp_variance = "exact";
    std::vector<std::uint64_t> exp_seeds;
    std::size_t exp_sampled = 0;
    double exp_sigmas = 2.0;
    std::uint32_t exp_floor = 15;
    exp->add_option("--graph", exp_graph, "Edge list path");
    exp->add_option("--ba", exp_ba, "Generate instead: N,M");
    exp->add_option("--seeds", exp_seeds, "Trial seeds (comma separated)")
        ->required()
        ->delimiter(',');
    exp->add_option("--out", exp_out, "Output directory")->required();
    exp->add_option("--sampled", exp_sampled,
                    "Use sampled parameters with this sample size (default: census)");
    exp->add_option("--variance-mode", exp_variance, "exact|paper")->capture_default_str();
    exp->add_option("--band-sigmas", exp_sigmas, "Band half-width in sigmas")->capture_default_str();
    exp->add_option("--degree-floor", exp_floor,
                    "High-degree cohort offset above k_min")->capture_default_str();

    // table1
    auto* tab = app.add_subcommand("table1",
                                   "Error statistics across a sweep of network sizes");
    std::vector<std::size_t> tab_sizes;
    std::size_t tab_trials = 3, tab_m = 10;
    std::uint64_t tab_seed = 1;
    std::string tab_out;
    tab->add_option("--sizes", tab_sizes, "Network sizes (comma separated)")
        ->required()
        ->delimiter(',');
    tab->add_option("--trials", tab_trials, "Trials (consecutive seeds) per size")->capture_default_str();
    tab->add_option("--seed", tab_seed, "First trial seed")->capture_default_str();
    tab->add_option("--m", tab_m, "Edges per arriving node")->capture_default_str();
    tab->add_option("--out", tab_out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (gen->parsed()) {
            return cmd_generate(gen_nodes, gen_m, gen_seed, gen_n0, gen_out);
        }
        if (est->parsed()) {
            return cmd_estimate_params(est_graph, est_samples, est_seed, est_census);
        }
        if (rank->parsed()) {
            return cmd_rank(rank_degree, rank_n, rank_kmin, rank_davg, rank_variance,
                            rank_sigmas);
        }
        if (exp->parsed()) {
            return cmd_experiment(exp_graph, exp_ba, exp_seeds, exp_out, exp_sampled,
                                  exp_variance, exp_sigmas, exp_floor);
        }
        if (tab->parsed()) {
            return cmd_table1(tab_sizes, tab_trials, tab_seed, tab_m, tab_out);
        }
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitConfig;
}
