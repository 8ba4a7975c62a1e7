#ifndef AGDSIM_MODEL_HPP
#define AGDSIM_MODEL_HPP

#include <cstdint>
#include <string>

namespace agdsim {

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Name of the generator behind CostStream, echoed into every report so
/// result files identify the bit stream they were produced with.
inline constexpr const char* kRngName = "splitmix64";

/// Parameter bundle for one experiment configuration.
///
/// n        : vertex count
/// lambda   : edge intensity, connection probability p = lambda * n^-alpha
/// alpha    : sparsity exponent, 0 < alpha < 1
/// beta     : exploration rate, block size B = ceil(beta/lambda * n^alpha)
/// window   : confirmation window A = ceil(lambda * n^(1-alpha)); a vertex is
///            accepted as a local minimum only after a full sweep of the
///            remaining candidates, which is also the quiet window of the
///            matching record process
struct ModelParams {
    std::int64_t n = 0;
    double lambda = 0.0;
    double alpha = 0.0;
    double beta = 0.0;

    double p = 0.0;
    std::int64_t block_size = 0;
    std::int64_t window = 0;
};

/// Validates and completes a parameter bundle. Throws std::invalid_argument
/// naming the violated constraint (n >= 2, lambda > 0, 0 < alpha < 1,
/// beta > 0, p <= 1).
ModelParams derive_params(std::int64_t n, double lambda, double alpha, double beta);

/// Source of uniform values in [0,1). All simulation randomness flows
/// through this interface so tests can script exact sequences.
class UniformSource {
public:
    virtual ~UniformSource() = default;
    virtual double next() = 0;
};

/// Deterministic counter-based stream of uniforms in [0,1).
///
/// Value k is a pure function of (seed, k): the splitmix64 output for
/// state seed + (k+1)*gamma. Identical seeds give byte-identical
/// sequences on every platform; copies replay the same tail.
class CostStream final : public UniformSource {
public:
    explicit CostStream(std::uint64_t seed) : seed_(seed) {}

    double next() override;

    /// Value at position k (0-based) without touching any state.
    static double value_at(std::uint64_t seed, std::uint64_t k);

    std::uint64_t seed() const { return seed_; }
    /// Number of values emitted so far.
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

/// Identifies one replication of an experiment.
struct SeedPlan {
    std::uint64_t master_seed = 0;
    std::uint64_t replication_index = 0;
};

/// Per-replication seed; injective in replication_index for a fixed master
/// (built from bijective mixing steps only).
std::uint64_t replication_seed(const SeedPlan& plan);

/// Domain-separated sub-seed, so one replication can own several
/// independent streams (costs, edges, start vertex, ...).
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t tag);

// Stream roles within one replication.
inline constexpr std::uint64_t kCostStreamTag = 0x636f7374;  // "cost"
inline constexpr std::uint64_t kEdgeStreamTag = 0x65646765;  // "edge"
inline constexpr std::uint64_t kStartStreamTag = 0x73746172; // "star"
inline constexpr std::uint64_t kAuxStreamTag = 0x61757869;   // "auxi"
inline constexpr std::uint64_t kArmOneTag = 0x61726d31;      // "arm1"
inline constexpr std::uint64_t kArmTwoTag = 0x61726d32;      // "arm2"

/// splitmix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t z);

/// 53-bit uniform in [0,1) from a 64-bit word.
inline double unit_interval(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

/// Uniform vertex in [0, n) from one 64-bit word (fixed-point multiply;
/// bias < n / 2^64).
std::uint32_t uniform_index(std::uint64_t word, std::uint64_t n);

} // namespace agdsim

#endif // AGDSIM_MODEL_HPP
