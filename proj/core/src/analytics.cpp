#include "agdsim/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace agdsim {

double harmonic(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("harmonic: m must be >= 0");
    if (m <= 1'000'000) {
        long double acc = 0.0L;
        for (std::int64_t k = m; k >= 1; --k) acc += 1.0L / static_cast<long double>(k);
        return static_cast<double>(acc);
    }
    const double x = static_cast<double>(m);
    return std::log(x) + kEulerGamma + 1.0 / (2.0 * x) - 1.0 / (12.0 * x * x);
}

double record_mean(std::int64_t window) {
    if (window < 1) throw std::invalid_argument("record_mean: window must be >= 1");
    return std::exp(harmonic(window - 1));
}

double residence_survival(std::int64_t j, std::int64_t k, const QuadratureSpec& spec) {
    if (j < 1) throw std::invalid_argument("residence_survival: j must be >= 1");
    if (k < 0) throw std::invalid_argument("residence_survival: k must be >= 0");
    if (k == 0) return 1.0;
    const double lgj = std::lgamma(static_cast<double>(j));
    const double kd = static_cast<double>(k);
    const double jm1 = static_cast<double>(j - 1);
    const auto integrand = [=](double t) {
        if (t <= 0.0) return 0.0;
        const double log_term = jm1 * std::log(t) - t + kd * std::log1p(-std::exp(-t)) - lgj;
        return std::exp(log_term);
    };
    // The integrand peaks between the gamma bulk (~j-1) and the survival
    // knee (~ln k); split there.
    const double split = std::max({1.0, jm1, std::log(kd + 1.0)});
    double value = integrate_semi_infinite(integrand, split, spec);
    return std::clamp(value, 0.0, 1.0);
}

double residence_survival_alternating(std::int64_t j, std::int64_t k) {
    if (j < 1) throw std::invalid_argument("residence_survival_alternating: j must be >= 1");
    if (k < 0) throw std::invalid_argument("residence_survival_alternating: k must be >= 0");
    if (k > 60) {
        throw std::domain_error(
            "residence_survival_alternating: k > 60 exceeds the alternating-sum conditioning "
            "limit; use residence_survival");
    }
    // Pascal row in exact integers; C(60,30) fits 64 bits.
    std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 1);
    for (std::int64_t r = 1; r <= k; ++r) {
        for (std::int64_t c = r - 1; c >= 1; --c) row[c] += row[c - 1];
    }
    // The sum cancels catastrophically in double (condition ~1e15 at
    // k = 60); accumulate in quad precision instead.
    __float128 acc = 0;
    for (std::int64_t l = 0; l <= k; ++l) {
        __float128 denom = 1;
        for (std::int64_t e = 0; e < j; ++e) denom *= static_cast<__float128>(l + 1);
        const __float128 term = static_cast<__float128>(row[static_cast<std::size_t>(l)]) / denom;
        acc += (l % 2 == 0) ? term : -term;
    }
    return static_cast<double>(acc);
}

double class_count_mean(std::int64_t cls, std::int64_t window, const QuadratureSpec& spec) {
    if (window < 2) throw std::invalid_argument("class_count_mean: window must be >= 2");
    if (cls < 1 || cls > window - 1)
        throw std::invalid_argument("class_count_mean: class must lie in [1, window-1]");
    // In u = 1 - e^-t the exhaustion integral of the terminal class is
    // exact: exp(-Int_0^t terminal) = (1-u) exp(sum_{m<window} u^m / m),
    // so E N^(cls) = Int_0^1 u^(cls-1) (1-u) exp(S(u)) du.
    const auto power_sum = [window](double u) {
        double s = 0.0;
        double up = 1.0;
        for (std::int64_t m = 1; m < window; ++m) {
            up *= u;
            s += up / static_cast<double>(m);
        }
        return s;
    };
    const double clsm1 = static_cast<double>(cls - 1);
    const auto integrand = [&power_sum, clsm1](double u) {
        if (u <= 0.0) return clsm1 == 0.0 ? 1.0 : 0.0;
        return std::exp(clsm1 * std::log(u) + power_sum(u)) * (1.0 - u);
    };
    return integrate(integrand, 0.0, 1.0, spec);
}

VarianceBounds record_variance_bounds(std::int64_t window) {
    if (window < 2) throw std::invalid_argument("record_variance_bounds: window must be >= 2");
    const double a = static_cast<double>(window);
    const double eh = record_mean(window);
    VarianceBounds b;
    b.lower = a * (a - 1.0) / 2.0 + (a - 1.0) * (eh - 2.0 * a + 1.0);
    b.upper = a * (a - 1.0) / 2.0 + (a - 1.0) * (a - 1.0) + 2.0 * a * eh - a * a - eh * eh;
    return b;
}

AsymptoticMeans asymptotic_means(const ModelParams& params) {
    const double scale = std::pow(static_cast<double>(params.n), 1.0 - params.alpha);
    const double eg = std::exp(kEulerGamma);
    AsymptoticMeans am;
    am.mean_steps = params.lambda / params.beta * eg * scale;
    am.mean_explorations = params.lambda * eg * scale;
    return am;
}

AnalyticReport analytic_report_for_window(std::int64_t window) {
    AnalyticReport r;
    r.harmonic_value = harmonic(window - 1);
    r.record_mean = std::exp(r.harmonic_value);
    if (window >= 2) {
        const VarianceBounds vb = record_variance_bounds(window);
        r.var_lower = vb.lower;
        r.var_upper = vb.upper;
    }
    return r;
}

AnalyticReport analytic_report(const ModelParams& params) {
    AnalyticReport r = analytic_report_for_window(params.window);
    const AsymptoticMeans am = asymptotic_means(params);
    r.asym_mean_steps = am.mean_steps;
    r.asym_mean_explorations = am.mean_explorations;
    return r;
}

} // namespace agdsim
