#ifndef AGDSIM_STATS_HPP
#define AGDSIM_STATS_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace agdsim {

/// Compensated (Neumaier) sum; order-insensitive at the 1e-12 level, so
/// aggregation does not depend on worker count.
double stable_sum(std::span<const double> values);

struct SummaryStats {
    std::int64_t count = 0;
    double mean = 0.0;
    double variance = 0.0;       // sample variance, ddof = 1
    double ci95_halfwidth = 0.0; // 1.96 * sd / sqrt(count)
};

SummaryStats summarize(std::span<const double> values);

/// Two-sample Kolmogorov-Smirnov distances: sup |F_a - F_b| and the
/// one-sided sup (F_a - F_b).
struct KsDistances {
    double two_sided = 0.0;
    double a_above_b = 0.0;
};
KsDistances ks_two_sample(std::vector<double> a, std::vector<double> b);

/// One-sample KS distance against a cdf given as a callable.
template <class Cdf>
double ks_one_sample(std::vector<double> sample, Cdf cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max({d, f - lo, hi - f});
    }
    return d;
}

/// Empirical quantile of a sorted sample (nearest-rank).
double quantile_sorted(std::span<const double> sorted, double q);

} // namespace agdsim

#endif // AGDSIM_STATS_HPP
