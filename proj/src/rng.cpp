#include "wptrelay/rng.hpp"

#include <cmath>

namespace wptrelay {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) noexcept {
    return (v << k) | (v >> (64 - k));
}

} // namespace

RandomStream RandomStream::from_seed(std::uint64_t seed, std::uint64_t stream_id) {
    RandomStream rs;
    std::uint64_t x = seed;
    // Fold the stream counter in through one extra permutation round so that
    // (seed, 0), (seed, 1), ... start from unrelated points of the sequence.
    x ^= splitmix64(stream_id) + 0x632BE59BD9B4E019ULL;
    bool all_zero = true;
    for (auto& word : rs.state_) {
        word = splitmix64(x);
        all_zero = all_zero && word == 0;
    }
    if (all_zero) {
        rs.state_[0] = 0x9E3779B97F4A7C15ULL;
    }
    return rs;
}

std::uint64_t RandomStream::next_u64() noexcept {
    auto& s = state_;
    const std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
    const std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
}

double RandomStream::uniform01() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform01();
}

double RandomStream::normal() noexcept {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
}

} // namespace wptrelay
