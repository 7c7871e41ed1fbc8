#pragma once

#include <atomic>
#include <cstdint>
#include <optional>

#include "degrank/graph.hpp"
#include "degrank/rng.hpp"

namespace degrank {

struct QueryCounts {
    std::uint64_t uniform_node = 0;
    std::uint64_t degree = 0;
    std::uint64_t neighbors = 0;
};

/// The only view of a graph that the sampling estimators get: uniform node
/// draws, degree lookups, neighbor lists. Every query is counted; counters
/// are atomic so concurrent estimator runs stay exact.
class AccessOracle {
public:
    explicit AccessOracle(const Graph& g) : graph_(&g) {}

    NodeId uniform_random_node(Rng& rng) const {
        uniform_node_queries_.fetch_add(1, std::memory_order_relaxed);
        return static_cast<NodeId>(bounded_uniform(rng, graph_->node_count()));
    }
    std::uint32_t degree_of(NodeId u) const {
        degree_queries_.fetch_add(1, std::memory_order_relaxed);
        return graph_->degree(u);
    }
    std::span<const NodeId> neighbors_of(NodeId u) const {
        neighbor_queries_.fetch_add(1, std::memory_order_relaxed);
        return graph_->neighbors(u);
    }

    QueryCounts counts() const {
        return {uniform_node_queries_.load(), degree_queries_.load(),
                neighbor_queries_.load()};
    }
    void reset_counts() const {
        uniform_node_queries_ = 0;
        degree_queries_ = 0;
        neighbor_queries_ = 0;
    }

private:
    const Graph* graph_;
    mutable std::atomic<std::uint64_t> uniform_node_queries_{0};
    mutable std::atomic<std::uint64_t> degree_queries_{0};
    mutable std::atomic<std::uint64_t> neighbor_queries_{0};
};

// Mean degree of `samples` uniform-with-replacement node draws.
// Unbiased for the true average degree. Costs exactly `samples` uniform-node
// queries plus `samples` degree queries.
double estimate_avg_degree(const AccessOracle& oracle, std::size_t samples,
                           std::uint64_t seed);

// Minimum degree seen across the sample. Never below the true minimum;
// overestimates when the sample misses the lowest degree class.
std::uint32_t estimate_k_min(const AccessOracle& oracle, std::size_t samples,
                             std::uint64_t seed);

struct CollisionEstimate {
    double n_hat = 0.0;            // +inf when no collisions occurred
    std::uint64_t collisions = 0;  // pairwise id collisions in the sample
    bool insufficient = false;
};

// Birthday estimate of the node count: draw r ids uniformly with
// replacement, count pairwise collisions c, return r(r-1)/(2c).
CollisionEstimate estimate_n_collisions(const AccessOracle& oracle,
                                        std::size_t samples, std::uint64_t seed);

struct ParamEstimate {
    double n_hat = 0.0;
    double d_avg_hat = 0.0;
    std::uint32_t k_min_hat = 0;
    std::optional<std::uint32_t> k_max_exact; // census only, reporting
    std::size_t sample_size = 0;              // 0 in census mode
    std::uint64_t rng_seed = 0;
    bool census = false;
    bool insufficient_collisions = false;
};

// Sampled parameter bundle. Average degree and minimum degree come from one
// shared sample (so k_min_hat <= d_avg_hat holds structurally); the node
// count uses an independent collision sample.
ParamEstimate sample_params(const Graph& g, std::size_t samples, std::uint64_t seed);

// Full-enumeration "sample": exact n, d_avg, k_min (and k_max, recorded for
// reporting only). Flagged as census in output.
ParamEstimate census_params(const Graph& g);

} // namespace degrank
