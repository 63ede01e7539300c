#pragma once

#include <array>
#include <cstdint>

namespace wptrelay {

/// Deterministic random stream (xoshiro256++ seeded through splitmix64).
///
/// Streams are derived from a (seed, stream_id) pair by mixing the pair
/// through the splitmix64 permutation, so per-trial streams can be created
/// independently from a counter without sharing state. Results are
/// reproducible on a given platform for a given pair.
class RandomStream {
  public:
    static RandomStream from_seed(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint64_t next_u64() noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() noexcept;

    double uniform(double lo, double hi) noexcept;

    /// Standard normal draw (Marsaglia polar; the spare deviate is cached).
    double normal() noexcept;

  private:
    std::array<std::uint64_t, 4> state_{};
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace wptrelay
