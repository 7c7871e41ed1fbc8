#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>
#include <vector>

#include "degrank/ba.hpp"
#include "degrank/graph.hpp"
#include "degrank/netprobe.hpp"
#include "oracles.hpp"

using namespace degrank;

namespace {

Graph star_k14() {
    std::istringstream in("0 1\n0 2\n0 3\n0 4\n");
    return load_edge_list(in).graph;
}

Graph ba_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
    BaConfig cfg;
    cfg.n = n;
    cfg.m = m;
    cfg.rng_seed = seed;
    return ba_generate(cfg);
}

} // namespace

TEST_CASE("census params are exact and flagged") {
    const Graph g = star_k14();
    const ParamEstimate est = census_params(g);
    CHECK(est.census);
    CHECK(est.n_hat == 5.0);
    CHECK(est.d_avg_hat == doctest::Approx(8.0 / 5.0).epsilon(1e-15));
    CHECK(est.k_min_hat == 1);
    REQUIRE(est.k_max_exact.has_value());
    CHECK(*est.k_max_exact == 4);
    CHECK(est.sample_size == 0);
}

TEST_CASE("estimators reject degenerate sample sizes") {
    const Graph g = star_k14();
    const AccessOracle oracle(g);
    CHECK_THROWS_AS(estimate_avg_degree(oracle, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_k_min(oracle, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_n_collisions(oracle, 1, 1), std::invalid_argument);
}

TEST_CASE("query counter is exact per estimator") {
    const Graph g = ba_graph(300, 3, 8);
    const AccessOracle oracle(g);

    estimate_avg_degree(oracle, 57, 4);
    QueryCounts counts = oracle.counts();
    CHECK(counts.uniform_node == 57);
    CHECK(counts.degree == 57);
    CHECK(counts.neighbors == 0);

    oracle.reset_counts();
    estimate_k_min(oracle, 23, 4);
    counts = oracle.counts();
    CHECK(counts.uniform_node == 23);
    CHECK(counts.degree == 23);

    oracle.reset_counts();
    estimate_n_collisions(oracle, 40, 4);
    counts = oracle.counts();
    CHECK(counts.uniform_node == 40);
    CHECK(counts.degree == 0);
}

TEST_CASE("avg degree estimate converges to the census value") {
    const Graph g = star_k14();
    const AccessOracle oracle(g);
    // expectation is 8/5; a large sample must get close
    const double est = estimate_avg_degree(oracle, 200000, 7);
    CHECK(est == doctest::Approx(1.6).epsilon(0.02));
}

TEST_CASE("avg degree estimator is unbiased across trials") {
    const Graph g = ba_graph(2000, 5, 3);
    const double truth = degree_sequence(g).d_avg;
    const AccessOracle oracle(g);
    std::vector<double> estimates;
    for (std::uint64_t t = 0; t < 300; ++t) {
        estimates.push_back(estimate_avg_degree(oracle, 100, 1000 + t));
    }
    const auto m = oracle::moments(estimates);
    const double se_of_mean = std::sqrt(m.variance / 300.0);
    CHECK(std::abs(m.mean - truth) < 4.0 * se_of_mean + 1e-9);
}

TEST_CASE("error quartiles shrink as the sample grows") {
    const Graph g = ba_graph(2000, 5, 9);
    const double truth = degree_sequence(g).d_avg;
    const AccessOracle oracle(g);
    std::vector<double> q75;
    for (const std::size_t samples : {std::size_t{50}, std::size_t{200}, std::size_t{800}}) {
        std::vector<double> errors;
        for (std::uint64_t t = 0; t < 150; ++t) {
            errors.push_back(std::abs(estimate_avg_degree(oracle, samples,
                                                          derive_seed(samples, t)) - truth));
        }
        q75.push_back(oracle::quantile(errors, 0.75));
    }
    CHECK(q75[0] > q75[1]);
    CHECK(q75[1] > q75[2]);
}

TEST_CASE("k_min estimate never undershoots and census nails it") {
    const Graph g = ba_graph(3000, 4, 2);
    const auto seq = degree_sequence(g);
    const AccessOracle oracle(g);
    for (std::uint64_t t = 0; t < 50; ++t) {
        CHECK(estimate_k_min(oracle, 30, t) >= seq.k_min);
    }
    CHECK(census_params(g).k_min_hat == seq.k_min);
}

TEST_CASE("a large sample finds the true minimum degree class") {
    const Graph g = ba_graph(10000, 10, 6);
    const AccessOracle oracle(g);
    // most nodes sit at the minimum degree, so 200 draws all but surely hit it
    CHECK(estimate_k_min(oracle, 200, 31) == 10);
}

TEST_CASE("single draw reports that node's degree") {
    std::istringstream in("0 1\n1 2\n2 3\n3 4\n4 0\n"); // 5-cycle, all degree 2
    const Graph g = load_edge_list(in).graph;
    const AccessOracle oracle(g);
    CHECK(estimate_k_min(oracle, 1, 12345) == 2);
}

TEST_CASE("collision estimator: single-node graph") {
    const Graph g(1, {});
    const AccessOracle oracle(g);
    const CollisionEstimate est = estimate_n_collisions(oracle, 2, 1);
    CHECK(est.collisions == 1);
    CHECK(est.n_hat == doctest::Approx(1.0));
    CHECK_FALSE(est.insufficient);
}

TEST_CASE("collision estimator: tiny sample on a huge id space is flagged") {
    const Graph g(1000000, {});
    const AccessOracle oracle(g);
    const CollisionEstimate est = estimate_n_collisions(oracle, 10, 77);
    CHECK(est.insufficient);
    CHECK(std::isinf(est.n_hat));
}

TEST_CASE("collision estimator median lands near the truth") {
    const Graph g(2000, {});
    const AccessOracle oracle(g);
    std::vector<double> estimates;
    for (std::uint64_t t = 0; t < 100; ++t) {
        const auto est = estimate_n_collisions(oracle, 600, 500 + t);
        REQUIRE_FALSE(est.insufficient);
        estimates.push_back(est.n_hat);
    }
    const double median = oracle::quantile(estimates, 0.5);
    CHECK(std::abs(median - 2000.0) < 0.2 * 2000.0);
}

TEST_CASE("sample_params bundles consistent estimates") {
    const Graph g = ba_graph(5000, 6, 14);
    const ParamEstimate est = sample_params(g, 400, 9);
    CHECK_FALSE(est.census);
    CHECK(est.sample_size == 400);
    CHECK(est.k_min_hat <= est.d_avg_hat); // shared sample guarantees it
    CHECK(est.k_min_hat >= 6);
    CHECK(std::isfinite(est.d_avg_hat));
    // deterministic in the seed
    const ParamEstimate again = sample_params(g, 400, 9);
    CHECK(again.d_avg_hat == est.d_avg_hat);
    CHECK(again.n_hat == est.n_hat);
    CHECK(again.k_min_hat == est.k_min_hat);
}
