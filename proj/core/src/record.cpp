#include "agdsim/record.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace agdsim {

namespace {
void check_window(std::int64_t window) {
    if (window < 1) throw std::invalid_argument("record run: window must be >= 1");
}
} // namespace

RecordOutcome run_record_direct(std::int64_t window, UniformSource& costs) {
    check_window(window);
    RecordOutcome out;
    double record = std::numeric_limits<double>::infinity();
    std::int64_t quiet = 0;        // steps since the current record appeared
    std::int64_t last_record_step = 0;

    for (;;) {
        const double w = costs.next();
        ++out.steps;
        if (w < record) {
            if (out.records > 0) out.residences.push_back(out.steps - last_record_step);
            record = w;
            ++out.records;
            out.record_values.push_back(w);
            last_record_step = out.steps;
            quiet = 0;
        } else {
            ++quiet;
        }
        if (quiet >= window - 1) {
            out.residences.push_back(window);
            return out;
        }
    }
}

std::int64_t sample_geometric_capped(double success, std::int64_t cap, UniformSource& rng) {
    if (cap < 1) throw std::invalid_argument("sample_geometric_capped: cap must be >= 1");
    if (success >= 1.0) return 1;
    if (success <= 0.0) return cap; // success never occurs within any finite window
    const double u = rng.next();              // in [0,1)
    const double g = std::log1p(-u);          // ln(1-u) <= 0
    const double d = std::log1p(-success);    // ln(1-success) < 0
    if (g <= static_cast<double>(cap - 1) * d) return cap;
    const std::int64_t tau = 1 + static_cast<std::int64_t>(std::floor(g / d));
    if (tau < 1) return 1;
    return tau < cap ? tau : cap;
}

RecordOutcome run_record_jump(std::int64_t window, UniformSource& rng) {
    check_window(window);
    RecordOutcome out;
    double record = 1.0;
    std::int64_t step_sum = 0; // residences of non-terminal records
    for (;;) {
        record *= rng.next();
        ++out.records;
        out.record_values.push_back(record);
        const std::int64_t tau = sample_geometric_capped(record, window, rng);
        out.residences.push_back(tau);
        if (tau >= window) {
            out.steps = window + step_sum;
            return out;
        }
        step_sum += tau;
    }
}

ResidenceBounds residence_bounds(std::int64_t j, double delta) {
    if (j < 1) throw std::invalid_argument("residence_bounds: j must be >= 1");
    if (!(delta > 0.0)) throw std::invalid_argument("residence_bounds: delta must be > 0");
    ResidenceBounds b;
    b.log_lower = static_cast<double>(j) * (1.0 - delta);
    b.log_upper = static_cast<double>(j) * (1.0 + delta);
    b.lower = std::exp(b.log_lower); // saturates to +inf past the double range
    b.upper = std::exp(b.log_upper);
    return b;
}

} // namespace agdsim
