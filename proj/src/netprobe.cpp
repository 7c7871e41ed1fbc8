#include "degrank/netprobe.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace degrank {

double estimate_avg_degree(const AccessOracle& oracle, std::size_t samples,
                           std::uint64_t seed) {
    if (samples < 1) {
        throw std::invalid_argument("estimate_avg_degree: samples must be >= 1");
    }
    Rng rng(seed);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        total += oracle.degree_of(oracle.uniform_random_node(rng));
    }
    return static_cast<double>(total) / static_cast<double>(samples);
}

std::uint32_t estimate_k_min(const AccessOracle& oracle, std::size_t samples,
                             std::uint64_t seed) {
    if (samples < 1) {
        throw std::invalid_argument("estimate_k_min: samples must be >= 1");
    }
    Rng rng(seed);
    std::uint32_t lowest = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t i = 0; i < samples; ++i) {
        lowest = std::min(lowest, oracle.degree_of(oracle.uniform_random_node(rng)));
    }
    return lowest;
}

CollisionEstimate estimate_n_collisions(const AccessOracle& oracle,
                                        std::size_t samples, std::uint64_t seed) {
    if (samples < 2) {
        throw std::invalid_argument("estimate_n_collisions: samples must be >= 2");
    }
    Rng rng(seed);
    std::unordered_map<NodeId, std::uint64_t> seen;
    seen.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        ++seen[oracle.uniform_random_node(rng)];
    }
    std::uint64_t collisions = 0;
    for (const auto& [id, count] : seen) {
        collisions += count * (count - 1) / 2;
    }
    CollisionEstimate est;
    est.collisions = collisions;
    if (collisions == 0) {
        est.n_hat = std::numeric_limits<double>::infinity();
        est.insufficient = true;
    } else {
        const double r = static_cast<double>(samples);
        est.n_hat = r * (r - 1.0) / (2.0 * static_cast<double>(collisions));
    }
    return est;
}

ParamEstimate sample_params(const Graph& g, std::size_t samples, std::uint64_t seed) {
    if (samples < 2) {
        throw std::invalid_argument("sample_params: samples must be >= 2");
    }
    AccessOracle oracle(g);
    ParamEstimate est;
    est.sample_size = samples;
    est.rng_seed = seed;

    // one shared degree sample keeps k_min_hat <= d_avg_hat by construction
    Rng rng(derive_seed(seed, 0));
    std::uint64_t total = 0;
    std::uint32_t lowest = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t i = 0; i < samples; ++i) {
        const std::uint32_t d = oracle.degree_of(oracle.uniform_random_node(rng));
        total += d;
        lowest = std::min(lowest, d);
    }
    est.d_avg_hat = static_cast<double>(total) / static_cast<double>(samples);
    est.k_min_hat = lowest;

    const CollisionEstimate nc = estimate_n_collisions(oracle, samples, derive_seed(seed, 1));
    est.n_hat = nc.n_hat;
    est.insufficient_collisions = nc.insufficient;
    return est;
}

ParamEstimate census_params(const Graph& g) {
    const DegreeSequence seq = degree_sequence(g);
    ParamEstimate est;
    est.n_hat = static_cast<double>(g.node_count());
    est.d_avg_hat = seq.d_avg;
    est.k_min_hat = seq.k_min;
    est.k_max_exact = seq.k_max;
    est.census = true;
    return est;
}

} // namespace degrank
