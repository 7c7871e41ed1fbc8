#include "degrank/ba.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "degrank/errors.hpp"
#include "degrank/rng.hpp"

namespace degrank {

void BaConfig::validate() const {
    const std::size_t seeds = seed_nodes();
    if (m < 1 || m > seeds || seeds >= n) {
        std::ostringstream msg;
        msg << "invalid growth config: need 1 <= m <= n0 < n, got n=" << n
            << " m=" << m << " n0=" << seeds;
        throw config_error(msg.str());
    }
    if (n > std::numeric_limits<NodeId>::max()) {
        throw config_error("node count exceeds 32-bit id space");
    }
}

Graph ba_generate(const BaConfig& cfg) {
    cfg.validate();
    const std::size_t n0 = cfg.seed_nodes();
    Rng rng(cfg.rng_seed);

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(cfg.m * (cfg.n - n0));
    // every edge endpoint goes into the pool, so a uniform draw from the
    // pool is a degree-proportional draw over nodes
    std::vector<NodeId> pool;
    pool.reserve(2 * cfg.m * (cfg.n - n0));

    std::vector<NodeId> targets;
    targets.reserve(cfg.m);
    for (std::size_t v = n0; v < cfg.n; ++v) {
        targets.clear();
        if (pool.empty()) {
            // all seeds still have degree zero: pick m of them uniformly
            std::vector<NodeId> seeds(n0);
            std::iota(seeds.begin(), seeds.end(), NodeId{0});
            for (std::size_t i = 0; i < cfg.m; ++i) {
                const std::size_t j = i + bounded_uniform(rng, n0 - i);
                std::swap(seeds[i], seeds[j]);
                targets.push_back(seeds[i]);
            }
        } else {
            while (targets.size() < cfg.m) {
                const NodeId t = pool[bounded_uniform(rng, pool.size())];
                if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
                    targets.push_back(t);
                }
            }
        }
        for (const NodeId t : targets) {
            edges.emplace_back(static_cast<NodeId>(v), t);
            pool.push_back(static_cast<NodeId>(v));
            pool.push_back(t);
        }
    }
    return Graph(cfg.n, std::move(edges));
}

std::string ba_meta_line(const BaConfig& cfg, std::size_t edge_count) {
    std::ostringstream meta;
    meta << "meta: generator=ba nodes=" << cfg.n << " m=" << cfg.m
         << " n0=" << cfg.seed_nodes() << " seed=" << cfg.rng_seed
         << " rng=" << kRngAlgorithm << " edges=" << edge_count;
    return meta.str();
}

} // namespace degrank
