#include "agdsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace agdsim {

double stable_sum(std::span<const double> values) {
    double sum = 0.0;
    double comp = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

SummaryStats summarize(std::span<const double> values) {
    SummaryStats s;
    s.count = static_cast<std::int64_t>(values.size());
    if (s.count == 0) return s;
    s.mean = stable_sum(values) / static_cast<double>(s.count);
    if (s.count < 2) return s;
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - s.mean;
        sq[i] = d * d;
    }
    s.variance = stable_sum(sq) / static_cast<double>(s.count - 1);
    s.ci95_halfwidth = 1.96 * std::sqrt(s.variance / static_cast<double>(s.count));
    return s;
}

KsDistances ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    KsDistances d;
    std::size_t i = 0, j = 0;
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        const double fa = static_cast<double>(i) / na;
        const double fb = static_cast<double>(j) / nb;
        d.two_sided = std::max(d.two_sided, std::abs(fa - fb));
        d.a_above_b = std::max(d.a_above_b, fa - fb);
    }
    return d;
}

double quantile_sorted(std::span<const double> sorted, double q) {
    if (sorted.empty()) throw std::invalid_argument("quantile_sorted: empty sample");
    q = std::clamp(q, 0.0, 1.0);
    const auto idx = static_cast<std::size_t>(
        std::ceil(q * static_cast<double>(sorted.size())) - 1.0 > 0.0
            ? std::ceil(q * static_cast<double>(sorted.size())) - 1.0
            : 0.0);
    return sorted[std::min(idx, sorted.size() - 1)];
}

} // namespace agdsim
