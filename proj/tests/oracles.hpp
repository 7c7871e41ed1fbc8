// Test-only reference implementations: brute-force rank counting straight
// from the definition, adaptive quadrature, random graphs, small stats.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "degrank/graph.hpp"
#include "degrank/rng.hpp"

namespace oracle {

// rank(u) = 1 + sum over v != u of [deg(v) > deg(u)], the O(n^2) definition
inline std::vector<std::uint32_t> pairwise_ranks(const std::vector<std::uint32_t>& degrees) {
    std::vector<std::uint32_t> ranks(degrees.size());
    for (std::size_t u = 0; u < degrees.size(); ++u) {
        std::uint32_t greater = 0;
        for (std::size_t v = 0; v < degrees.size(); ++v) {
            if (v != u && degrees[v] > degrees[u]) ++greater;
        }
        ranks[u] = greater + 1;
    }
    return ranks;
}

// Adaptive Simpson quadrature.
inline double simpson_rec(const std::function<double(double)>& f, double a, double b,
                          double fa, double fm, double fb, double whole, double tol,
                          int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 60);
}

// Erdos-Renyi-style random simple graph (plus a guaranteed spanning of ids
// through node_count so every id exists).
inline degrank::Graph random_graph(degrank::Rng& rng, std::size_t n, double edge_prob) {
    std::vector<std::pair<degrank::NodeId, degrank::NodeId>> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (degrank::uniform_unit(rng) < edge_prob) {
                edges.emplace_back(static_cast<degrank::NodeId>(u),
                                   static_cast<degrank::NodeId>(v));
            }
        }
    }
    return degrank::Graph(n, std::move(edges));
}

struct Moments {
    double mean = 0.0;
    double variance = 0.0; // sample variance (n-1)
};

inline Moments moments(const std::vector<double>& xs) {
    Moments m;
    for (const double x : xs) m.mean += x;
    m.mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (const double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.variance = xs.size() > 1 ? ss / static_cast<double>(xs.size() - 1) : 0.0;
    return m;
}

inline double quantile(std::vector<double> xs, double q) {
    std::sort(xs.begin(), xs.end());
    const double pos = q * static_cast<double>(xs.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, xs.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return xs[lo] * (1.0 - frac) + xs[hi] * frac;
}

} // namespace oracle
