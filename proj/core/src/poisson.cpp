#include "agdsim/poisson.hpp"

#include <cmath>
#include <stdexcept>

namespace agdsim {

double class_intensity(std::int64_t cls, std::int64_t window, double t) {
    if (cls < 1 || cls > window) throw std::domain_error("class_intensity: class out of range");
    if (!(t >= 0.0)) throw std::domain_error("class_intensity: t must be >= 0");
    const double log_q = -t;                 // ln of the survival factor e^-t
    const std::int64_t fail_exponent = cls - 1;
    double log_fail = 0.0;
    if (fail_exponent > 0) {
        // (1 - e^-t)^(cls-1); log1p keeps small t exact, and t == 0 gives 0
        const double l1 = std::log1p(-std::exp(-t));
        log_fail = static_cast<double>(fail_exponent) * l1;
    }
    if (cls == window) return std::exp(log_fail);
    return std::exp(log_fail + log_q);
}

double sample_unit_exponential(UniformSource& rng) {
    double u = rng.next();
    while (u == 0.0) u = rng.next();
    return -std::log(u);
}

RecordOutcome run_poisson_representation(std::int64_t window, UniformSource& rng) {
    if (window < 1) throw std::invalid_argument("run_poisson_representation: window must be >= 1");
    constexpr std::int64_t kPointCap = 10'000'000;

    RecordOutcome out;
    double t = 0.0;
    std::int64_t class_sum = 0;
    for (;;) {
        t += sample_unit_exponential(rng);
        ++out.records;
        if (out.records > kPointCap) {
            throw std::runtime_error(
                "run_poisson_representation: point cap hit before a terminal mark");
        }
        out.record_values.push_back(std::exp(-t));
        // The class law at time t is geometric in the record value e^-t,
        // truncated to the terminal class; invert it directly.
        const std::int64_t cls = sample_geometric_capped(std::exp(-t), window, rng);
        out.residences.push_back(cls);
        if (cls >= window) {
            out.steps = window + class_sum;
            return out;
        }
        class_sum += cls;
    }
}

} // namespace agdsim
