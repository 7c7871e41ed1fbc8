#pragma once

#include <compare>
#include <cstdint>
#include <optional>

namespace degrank {

/// Everything the rank estimator knows about a network. k_max is optional:
/// the k_max-free tail approximation never needs it, only the finite-support
/// density helpers do.
struct NetworkParams {
    std::size_t n = 0;
    std::uint32_t k_min = 0;
    std::optional<std::uint32_t> k_max;
    double d_avg = 0.0;
    double gamma = 0.0;

    // true when gamma sits so close to 2 that the k_max-free approximation
    // degrades; surfaced as a warning, not an error
    bool gamma_near_two() const { return gamma <= 2.05; }
    void validate() const;
};

// 2 + (k_min - 1/2) / (d_avg - k_min + 1/2). Requires d_avg > k_min - 1/2.
double fit_gamma(std::uint32_t k_min, double d_avg);

// Fits gamma from (k_min, d_avg) and validates the bundle.
NetworkParams make_params(std::size_t n, std::uint32_t k_min, double d_avg,
                          std::optional<std::uint32_t> k_max = std::nullopt);

// P(deg > k) under the fitted power law with the upper support limit sent to
// infinity: ((k + 1/2) / (k_min - 1/2))^(1 - gamma), clamped into [0, 1].
// Valid for k >= k_min - 1 (the distribution floor, where p = 1).
double tail_probability(std::uint32_t k, const NetworkParams& params);

// Same tail but integrated over the finite support (k + 1/2, k_max + 1/2].
// Requires k_max.
double tail_probability_exact(std::uint32_t k, const NetworkParams& params);

// Normalizing constant of f(k) = c * k^-gamma over
// [k_min - 1/2, k_max + 1/2]: (gamma-1) / ((k_min-1/2)^(1-gamma) - (k_max+1/2)^(1-gamma)).
// Requires k_max > k_min and gamma > 1.
double normalization_c(const NetworkParams& params);

// P(deg = k): the density integrated over (k - 1/2, k + 1/2), closed form.
// Zero outside [k_min, k_max].
double pdf_f(std::uint32_t k, const NetworkParams& params);

// P(rank = alpha | deg = k): binomial with n-1 trials and success
// probability tail_probability(k). Evaluated in log space.
double rank_pmf(std::size_t alpha, std::uint32_t k, const NetworkParams& params);

// Binomial layer on a given success probability (the distribution of
// 1 + Binomial(n-1, p)).
double rank_pmf_from_p(std::size_t alpha, std::size_t n, double p);

enum class VarianceMode {
    Exact, // (n-1) p (1-p), the exact binomial variance
    Paper  // (n-1) p - (n-1) p^2 - 2, clamped at zero
};

struct RankEstimate {
    std::uint32_t degree_k = 0;
    double p = 0.0;
    double expected_rank = 0.0; // (n-1) p + 1
    double variance = 0.0;
    VarianceMode variance_mode = VarianceMode::Exact;
    double band_low = 0.0;  // expected_rank -/+ band_sigmas * sqrt(variance),
    double band_high = 0.0; // clamped into [1, n]
    bool p_clamped = false;
    bool variance_clamped = false;
};

RankEstimate rank_estimate_from_p(double p, std::size_t n,
                                  VarianceMode mode = VarianceMode::Exact,
                                  double band_sigmas = 2.0);

RankEstimate expected_rank(std::uint32_t k, const NetworkParams& params,
                           VarianceMode mode = VarianceMode::Exact,
                           double band_sigmas = 2.0);

// Orders two degrees by expected rank: less means k1 ranks better (smaller
// expected rank). Equal degrees compare equal.
std::strong_ordering compare_nodes(std::uint32_t k1, std::uint32_t k2,
                                   const NetworkParams& params);

namespace detail {
// (gamma-1) / (lo^(1-gamma) - hi^(1-gamma)): normalizer of x^-gamma on [lo, hi]
double power_law_normalization(double lo, double hi, double gamma);
} // namespace detail

} // namespace degrank
