#pragma once

#include <cstdint>
#include <utility>

namespace qoptml {

/// Seed of one reproducible Monte-Carlo stream. Identical (master_seed,
/// stream_id) pairs reproduce identical draws regardless of execution order.
struct RngSeed {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;
};

/// Splittable counter generator (splitmix64 core) keyed by (master_seed,
/// stream_id). Gaussian variates use the Box-Muller transform, so every draw
/// consumes a fixed number of outputs and sequences are bitwise reproducible
/// across platforms with IEEE doubles.
class StreamRng {
  public:
    explicit StreamRng(RngSeed seed) : StreamRng(seed.master_seed, seed.stream_id) {}
    StreamRng(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [a, b).
    double uniform(double a, double b);

    /// Standard normal; consumes two uniforms.
    double normal();
    /// Independent standard normal pair from one Box-Muller step.
    std::pair<double, double> normal_pair();

  private:
    std::uint64_t state_;
};

}  // namespace qoptml
