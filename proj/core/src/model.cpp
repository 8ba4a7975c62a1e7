#include "agdsim/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace agdsim {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
} // namespace

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

double CostStream::next() {
    ++counter_;
    return unit_interval(mix64(seed_ + counter_ * kGolden));
}

double CostStream::value_at(std::uint64_t seed, std::uint64_t k) {
    return unit_interval(mix64(seed + (k + 1) * kGolden));
}

std::uint64_t replication_seed(const SeedPlan& plan) {
    const std::uint64_t a = mix64(plan.master_seed + kGolden);
    const std::uint64_t b = mix64(plan.replication_index + kGolden);
    return mix64((a ^ b) + kGolden);
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t tag) {
    return mix64((seed ^ mix64(tag + kGolden)) + kGolden);
}

std::uint32_t uniform_index(std::uint64_t word, std::uint64_t n) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(word) * n;
    return static_cast<std::uint32_t>(prod >> 64);
}

ModelParams derive_params(std::int64_t n, double lambda, double alpha, double beta) {
    auto fail = [](const std::string& what) {
        throw std::invalid_argument("derive_params: " + what);
    };
    if (n < 2) fail("n must be >= 2");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) fail("lambda must be > 0");
    if (!(alpha > 0.0 && alpha < 1.0)) fail("alpha must lie in (0,1)");
    if (!(beta > 0.0) || !std::isfinite(beta)) fail("beta must be > 0");

    ModelParams mp;
    mp.n = n;
    mp.lambda = lambda;
    mp.alpha = alpha;
    mp.beta = beta;
    mp.p = lambda * std::pow(static_cast<double>(n), -alpha);
    if (mp.p > 1.0) {
        std::ostringstream os;
        os << "derive_params: p = lambda*n^-alpha = " << mp.p << " exceeds 1";
        throw std::invalid_argument(os.str());
    }
    // ceil with a snap for values a rounding error away from an integer,
    // so e.g. n^0.5 computed as 100.0000000000001 still gives 100
    const auto snapped_ceil = [](double x) {
        const double r = std::round(x);
        if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) return r;
        return std::ceil(x);
    };
    mp.block_size = static_cast<std::int64_t>(
        snapped_ceil(beta / lambda * std::pow(static_cast<double>(n), alpha)));
    mp.window = static_cast<std::int64_t>(
        snapped_ceil(lambda * std::pow(static_cast<double>(n), 1.0 - alpha)));
    if (mp.block_size < 1) mp.block_size = 1;
    if (mp.window < 1) mp.window = 1;
    return mp;
}

} // namespace agdsim
