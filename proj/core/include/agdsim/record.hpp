#ifndef AGDSIM_RECORD_HPP
#define AGDSIM_RECORD_HPP

#include <cstdint>
#include <vector>

#include "agdsim/model.hpp"

namespace agdsim {

/// One run of the record (cost exploration) process: the running minimum
/// of a uniform stream, stopped once the current minimum has survived a
/// quiet window of `window` (i.e. window - 1 consecutive non-improving
/// values after it appeared).
///
/// steps         : values consumed when the run stops (S~)
/// records       : number of running minima, the terminal one included (V~)
/// record_values : the minima, strictly decreasing
/// residences    : values spent at each record before the next one; the
///                 terminal entry is capped at `window`, every earlier one
///                 is < window
///
/// Invariant: steps == window + sum(residences[0 .. records-2]).
struct RecordOutcome {
    std::int64_t steps = 0;
    std::int64_t records = 0;
    std::vector<double> record_values;
    std::vector<std::int64_t> residences;
};

/// Step-by-step simulation consuming one stream value per step. Exists
/// alongside the jump samplers because coupling checks against the block
/// search must consume the same cost stream.
RecordOutcome run_record_direct(std::int64_t window, UniformSource& costs);

/// Jump simulation: each record is a uniform fraction of the previous one
/// and its residence is geometric with the record value as success
/// probability, so whole residences are sampled at once.
RecordOutcome run_record_jump(std::int64_t window, UniformSource& rng);

/// Geometric sample, P(tau = k) = (1-y)^(k-1) * y, truncated at `cap`
/// (values >= cap are indistinguishable for the stopping rule). Stable for
/// success probabilities down to the underflow edge.
std::int64_t sample_geometric_capped(double success, std::int64_t cap, UniformSource& rng);

/// Concentration interval (e^{j(1-delta)}, e^{j(1+delta)}) for the j-th
/// residence; the plain fields saturate to +inf when out of double range,
/// the log fields always hold j*(1 -+ delta).
struct ResidenceBounds {
    double lower = 0.0;
    double upper = 0.0;
    double log_lower = 0.0;
    double log_upper = 0.0;
};

/// Throws std::invalid_argument for j < 1 or delta <= 0.
ResidenceBounds residence_bounds(std::int64_t j, double delta);

} // namespace agdsim

#endif // AGDSIM_RECORD_HPP
