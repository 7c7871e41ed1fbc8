#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "degrank/graph.hpp"

namespace degrank {

struct BaConfig {
    std::size_t n = 0;                // target node count
    std::size_t m = 0;                // edges added per arriving node
    std::optional<std::size_t> n0;    // seed node count, defaults to m
    std::uint64_t rng_seed = 1;

    std::size_t seed_nodes() const { return n0.value_or(m); }
    void validate() const; // throws config_error unless 1 <= m <= n0 < n
};

// Preferential attachment growth: starts from n0 disconnected seed nodes;
// the first arrival picks m distinct seeds uniformly (degrees are all zero
// at that point), every later arrival picks m distinct existing nodes with
// probability proportional to current degree. Deterministic in the config.
// Produces exactly n nodes and m * (n - n0) edges.
Graph ba_generate(const BaConfig& cfg);

// "meta: ..." description of the run, embedded as the header comment of
// generated edge-list files.
std::string ba_meta_line(const BaConfig& cfg, std::size_t edge_count);

} // namespace degrank
