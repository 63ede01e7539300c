#include "wptrelay/numerics.hpp"

#include <cmath>

namespace wptrelay {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;
constexpr double kInvSqrt2 = 0.7071067811865475244008444;

// r(z) = 1 / (z + 1/(z + 2/(z + 3/(z + ...)))), evaluated backwards.
// Truncation at an odd depth under-approximates the true ratio, keeping
// r(z)*z < 1 exact in floating point as well as in the limit.
double mills_continued_fraction(double z) noexcept {
    constexpr int depth = 15;
    double acc = 0.0;
    for (int j = depth; j >= 1; --j) {
        acc = static_cast<double>(j) / (z + acc);
    }
    return 1.0 / (z + acc);
}

} // namespace

double std_normal_pdf(double z) noexcept {
    return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

double std_normal_cdf(double z) noexcept {
    return 0.5 * std::erfc(-z * kInvSqrt2);
}

double std_normal_upper_tail(double z) noexcept {
    return 0.5 * std::erfc(z * kInvSqrt2);
}

double mills_ratio(double z) noexcept {
    if (z > 30.0) {
        return mills_continued_fraction(z);
    }
    return std_normal_upper_tail(z) / std_normal_pdf(z);
}

} // namespace wptrelay
