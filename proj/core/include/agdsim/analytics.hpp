#ifndef AGDSIM_ANALYTICS_HPP
#define AGDSIM_ANALYTICS_HPP

#include <cstdint>

#include "agdsim/model.hpp"
#include "agdsim/quadrature.hpp"

namespace agdsim {

/// H_m = sum_{k=1}^m 1/k, H_0 = 0. Exact summation up to m = 10^6, the
/// ln m + gamma + 1/(2m) - 1/(12 m^2) expansion beyond (error < 1e-12
/// there).
double harmonic(std::int64_t m);

/// Mean of the stopped record process: exp(H_{window-1}).
double record_mean(std::int64_t window);

/// P(residence of the j-th record > k), by adaptive quadrature of
/// t^(j-1) e^-t (1-e^-t)^k / Gamma(j) over [0, inf), evaluated in log
/// space. Exact 1/(k+1) at j = 1.
double residence_survival(std::int64_t j, std::int64_t k, const QuadratureSpec& spec = {});

/// Same quantity through the alternating binomial sum
/// sum_{l=0}^k (-1)^l C(k,l) (l+1)^-j. Exact 64-bit binomials with
/// extended-precision accumulation; the sum's conditioning limits k to 60
/// (throws std::domain_error beyond).
double residence_survival_alternating(std::int64_t j, std::int64_t k);

/// Expected number of class-`cls` marks before the first terminal mark,
/// E N^(cls) at the stopping barrier: the exhaustion integral of the
/// terminal class has a closed form, leaving one adaptive integral.
/// Requires 1 <= cls <= window - 1.
double class_count_mean(std::int64_t cls, std::int64_t window, const QuadratureSpec& spec = {});

/// Closed-form bracket for Var of the stopped record sum. lower comes
/// from the conditional-variance decomposition, upper from dominating the
/// stopped counts by their unstopped limits; lower/window^2 ->
/// e^gamma - 3/2, upper/window^2 -> 3/2 - (e^gamma - 1)^2.
struct VarianceBounds {
    double lower = 0.0;
    double upper = 0.0;
};
VarianceBounds record_variance_bounds(std::int64_t window);

/// First-order asymptotics of the search: mean steps
/// (lambda/beta) e^gamma n^(1-alpha) and mean explorations
/// lambda e^gamma n^(1-alpha).
struct AsymptoticMeans {
    double mean_steps = 0.0;
    double mean_explorations = 0.0;
};
AsymptoticMeans asymptotic_means(const ModelParams& params);

/// Reference bundle for one configuration.
struct AnalyticReport {
    double harmonic_value = 0.0;   // H_{window-1}
    double record_mean = 0.0;      // exp(H_{window-1})
    double var_lower = 0.0;
    double var_upper = 0.0;
    double asym_mean_steps = 0.0;         // 0 when no n is involved
    double asym_mean_explorations = 0.0;
};
AnalyticReport analytic_report(const ModelParams& params);
AnalyticReport analytic_report_for_window(std::int64_t window);

} // namespace agdsim

#endif // AGDSIM_ANALYTICS_HPP
