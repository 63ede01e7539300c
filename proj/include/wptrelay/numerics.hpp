#pragma once

#include <cmath>
#include <utility>

#include "wptrelay/errors.hpp"

namespace wptrelay {

/// Standard normal density φ(z) = exp(-z²/2)/√(2π).
double std_normal_pdf(double z) noexcept;

/// Standard normal CDF Φ(z), evaluated through erfc so that both tails keep
/// full relative accuracy (better than 1e-12 against a reference evaluation).
double std_normal_cdf(double z) noexcept;

/// Upper tail 1 - Φ(z) without subtraction, for use where Φ(z) → 1.
double std_normal_upper_tail(double z) noexcept;

/// Mills ratio (1 - Φ(z))/φ(z) for the standard normal.
///
/// For z > 30 the tail and the density individually underflow long before the
/// ratio does; a continued-fraction evaluation is used there. The continued
/// fraction is truncated at an odd depth, which under-approximates, so the
/// returned value stays strictly below the 1/z bound for all z > 0.
double mills_ratio(double z) noexcept;

/// Search controls for bisect().
struct BisectionSpec {
    double lo = 0.0;
    double hi = 1.0;
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_iter = 200;

    BisectionSpec with_bracket(double new_lo, double new_hi) const {
        BisectionSpec s = *this;
        s.lo = new_lo;
        s.hi = new_hi;
        return s;
    }
};

/// Bisection solve of f(x) == target for f strictly increasing on [lo, hi].
///
/// Stops once the bracket width guarantees |x - x*| <= abs_tol + rel_tol*|x*|.
/// Throws BracketError when target lies outside [f(lo), f(hi)] and
/// NoConvergence when max_iter halvings were not enough.
template <class F>
double bisect(F&& f, double target, const BisectionSpec& spec) {
    if (!(spec.lo < spec.hi) || !(spec.abs_tol > 0.0) || spec.rel_tol < 0.0 ||
        spec.max_iter < 1) {
        throw DomainError("bisect: invalid BisectionSpec");
    }
    double lo = spec.lo;
    double hi = spec.hi;
    const double flo = f(lo);
    const double fhi = f(hi);
    if (!(flo <= target) || !(target <= fhi)) {
        throw BracketError("bisect: target not enclosed by [f(lo), f(hi)]");
    }
    if (flo == target) return lo;
    if (fhi == target) return hi;

    for (int iter = 0; iter < spec.max_iter; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double width_goal = spec.abs_tol + spec.rel_tol * std::fabs(mid);
        if (hi - lo <= 2.0 * width_goal || mid <= lo || mid >= hi) {
            return mid;
        }
        if (f(mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw NoConvergence("bisect: max_iter exceeded before reaching tolerance");
}

} // namespace wptrelay
