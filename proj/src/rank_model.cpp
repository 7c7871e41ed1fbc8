#include "degrank/rank_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace degrank {

namespace {

[[noreturn]] void domain_fail(const std::string& msg) {
    throw std::domain_error(msg);
}

double require_k_max(const NetworkParams& params, const char* who) {
    if (!params.k_max) {
        domain_fail(std::string(who) + ": k_max is required but absent");
    }
    if (*params.k_max <= params.k_min) {
        domain_fail(std::string(who) + ": need k_max > k_min, got k_max=" +
                    std::to_string(*params.k_max) + " k_min=" +
                    std::to_string(params.k_min));
    }
    return static_cast<double>(*params.k_max) + 0.5;
}

// unclamped ((k+1/2)/(k_min-1/2))^(1-gamma); domain-checks k
double tail_raw(std::uint32_t k, const NetworkParams& params) {
    if (static_cast<std::uint64_t>(k) + 1 < params.k_min) {
        std::ostringstream msg;
        msg << "degree " << k << " below distribution floor k_min-1=" << (params.k_min - 1);
        domain_fail(msg.str());
    }
    const double ratio = (static_cast<double>(k) + 0.5) /
                         (static_cast<double>(params.k_min) - 0.5);
    return std::pow(ratio, 1.0 - params.gamma);
}

} // namespace

void NetworkParams::validate() const {
    if (n < 2) {
        domain_fail("network params: need n >= 2, got n=" + std::to_string(n));
    }
    if (k_min < 1) {
        domain_fail("network params: need k_min >= 1");
    }
    const double floor = static_cast<double>(k_min) - 0.5;
    if (!(d_avg > floor)) {
        std::ostringstream msg;
        msg << "network params: need d_avg > k_min - 1/2, got d_avg=" << d_avg
            << " k_min=" << k_min;
        domain_fail(msg.str());
    }
    if (!(gamma > 2.0)) {
        std::ostringstream msg;
        msg << "network params: tail exponent must exceed 2, got gamma=" << gamma;
        domain_fail(msg.str());
    }
    if (k_max && *k_max < k_min) {
        domain_fail("network params: k_max < k_min");
    }
}

double fit_gamma(std::uint32_t k_min, double d_avg) {
    const double floor = static_cast<double>(k_min) - 0.5;
    if (!(d_avg > floor)) {
        std::ostringstream msg;
        msg << "fit_gamma: need d_avg > k_min - 1/2, got k_min=" << k_min
            << " d_avg=" << d_avg;
        domain_fail(msg.str());
    }
    return 2.0 + floor / (d_avg - floor);
}

NetworkParams make_params(std::size_t n, std::uint32_t k_min, double d_avg,
                          std::optional<std::uint32_t> k_max) {
    NetworkParams params;
    params.n = n;
    params.k_min = k_min;
    params.k_max = k_max;
    params.d_avg = d_avg;
    params.gamma = fit_gamma(k_min, d_avg);
    params.validate();
    return params;
}

double tail_probability(std::uint32_t k, const NetworkParams& params) {
    return std::clamp(tail_raw(k, params), 0.0, 1.0);
}

double tail_probability_exact(std::uint32_t k, const NetworkParams& params) {
    const double hi = require_k_max(params, "tail_probability_exact");
    if (static_cast<std::uint64_t>(k) + 1 < params.k_min) {
        domain_fail("tail_probability_exact: degree below distribution floor");
    }
    const double lo = static_cast<double>(params.k_min) - 0.5;
    const double x = static_cast<double>(k) + 0.5;
    const double e = 1.0 - params.gamma;
    // (x^e - hi^e) / (lo^e - hi^e)
    const double p = (std::pow(x, e) - std::pow(hi, e)) /
                     (std::pow(lo, e) - std::pow(hi, e));
    return std::clamp(p, 0.0, 1.0);
}

double normalization_c(const NetworkParams& params) {
    const double hi = require_k_max(params, "normalization_c");
    if (!(params.gamma > 1.0)) {
        domain_fail("normalization_c: need gamma > 1");
    }
    return detail::power_law_normalization(static_cast<double>(params.k_min) - 0.5,
                                           hi, params.gamma);
}

double pdf_f(std::uint32_t k, const NetworkParams& params) {
    require_k_max(params, "pdf_f");
    if (k < params.k_min || k > *params.k_max) {
        return 0.0;
    }
    const double c = normalization_c(params);
    const double e = 1.0 - params.gamma;
    const double lo_edge = static_cast<double>(k) - 0.5;
    const double hi_edge = static_cast<double>(k) + 0.5;
    return c * (std::pow(lo_edge, e) - std::pow(hi_edge, e)) / (params.gamma - 1.0);
}

double rank_pmf_from_p(std::size_t alpha, std::size_t n, double p) {
    if (alpha < 1 || alpha > n) {
        domain_fail("rank_pmf: alpha=" + std::to_string(alpha) +
                    " outside [1, " + std::to_string(n) + "]");
    }
    if (p <= 0.0) return alpha == 1 ? 1.0 : 0.0;
    if (p >= 1.0) return alpha == n ? 1.0 : 0.0;
    const double nd = static_cast<double>(n);
    const double a = static_cast<double>(alpha);
    // log C(n-1, alpha-1) + (alpha-1) log p + (n-alpha) log(1-p)
    const double log_pmf = std::lgamma(nd) - std::lgamma(a) - std::lgamma(nd - a + 1.0) +
                           (a - 1.0) * std::log(p) + (nd - a) * std::log1p(-p);
    return std::exp(log_pmf);
}

double rank_pmf(std::size_t alpha, std::uint32_t k, const NetworkParams& params) {
    return rank_pmf_from_p(alpha, params.n, tail_probability(k, params));
}

RankEstimate rank_estimate_from_p(double p, std::size_t n, VarianceMode mode,
                                  double band_sigmas) {
    RankEstimate est;
    est.p_clamped = !(p >= 0.0 && p <= 1.0);
    est.p = std::clamp(p, 0.0, 1.0);
    est.variance_mode = mode;

    const double trials = static_cast<double>(n) - 1.0;
    est.expected_rank = trials * est.p + 1.0;
    const double binomial = trials * est.p * (1.0 - est.p);
    if (mode == VarianceMode::Exact) {
        est.variance = binomial;
    } else {
        const double shifted = binomial - 2.0;
        est.variance_clamped = shifted < 0.0;
        est.variance = std::max(0.0, shifted);
    }
    const double half_width = band_sigmas * std::sqrt(est.variance);
    est.band_low = std::max(1.0, est.expected_rank - half_width);
    est.band_high = std::min(static_cast<double>(n), est.expected_rank + half_width);
    return est;
}

RankEstimate expected_rank(std::uint32_t k, const NetworkParams& params,
                           VarianceMode mode, double band_sigmas) {
    RankEstimate est = rank_estimate_from_p(tail_raw(k, params), params.n, mode,
                                            band_sigmas);
    est.degree_k = k;
    return est;
}

std::strong_ordering compare_nodes(std::uint32_t k1, std::uint32_t k2,
                                   const NetworkParams& params) {
    if (k1 == k2) return std::strong_ordering::equal;
    const double r1 = expected_rank(k1, params).expected_rank;
    const double r2 = expected_rank(k2, params).expected_rank;
    if (r1 < r2) return std::strong_ordering::less;
    if (r1 > r2) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace detail {

double power_law_normalization(double lo, double hi, double gamma) {
    if (!(gamma > 1.0) || !(hi > lo) || !(lo > 0.0)) {
        domain_fail("power_law_normalization: need 0 < lo < hi and gamma > 1");
    }
    const double e = 1.0 - gamma;
    return (gamma - 1.0) / (std::pow(lo, e) - std::pow(hi, e));
}

} // namespace detail

} // namespace degrank
