#ifndef AGDSIM_POISSON_HPP
#define AGDSIM_POISSON_HPP

#include <cstdint>

#include "agdsim/model.hpp"
#include "agdsim/record.hpp"

namespace agdsim {

/// Residence-class weight for a point of the unit-rate process at time t:
/// class i < window has weight (1-e^-t)^(i-1) e^-t, the terminal class
/// (i == window) has weight (1-e^-t)^(window-1). The weights sum to one.
/// Computed in log space for large exponents. Throws std::domain_error
/// outside 1 <= i <= window, t >= 0.
double class_intensity(std::int64_t cls, std::int64_t window, double t);

/// Exponential(1) draw as -ln(U) for the source's next nonzero uniform.
double sample_unit_exponential(UniformSource& rng);

/// Third sampler of the stopped record law: emits unit-rate points
/// (exponential gaps), marks each with a residence class drawn from
/// class_intensity at its time, and stops at the first terminal point.
/// steps = window + sum of the non-terminal classes, records = number of
/// points. Throws std::runtime_error if the safety cap of 1e7 points is
/// hit (unreachable unless the marking is broken).
RecordOutcome run_poisson_representation(std::int64_t window, UniformSource& rng);

} // namespace agdsim

#endif // AGDSIM_POISSON_HPP
