// Test-only reference implementations, kept independent of the library code
// they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

// Normal CDF via the Hart (1968) rational approximation, as popularized by
// Alan Miller's NORMP; accurate to ~1e-15. Independent of erfc.
inline double hart_normal_cdf(double z) {
    const double zabs = std::fabs(z);
    if (z > 37.0) return 1.0;
    if (z < -37.0) return 0.0;
    const double expntl = std::exp(-0.5 * zabs * zabs);
    const double pdf = expntl / 2.506628274631001;
    double p;
    if (zabs < 7.071067811865475) {
        p = expntl *
            ((((((3.526249659989109e-02 * zabs + 0.7003830644436881) * zabs +
                 6.373962203531650) *
                    zabs +
                33.91286607838300) *
                   zabs +
               112.0792914978709) *
                  zabs +
              221.2135961699311) *
                 zabs +
             220.2068679123761) /
            (((((((8.838834764831844e-2 * zabs + 1.755667163182642) * zabs +
                  16.06417757920695) *
                     zabs +
                 86.78073220294608) *
                    zabs +
                296.5642487796737) *
                   zabs +
               637.3336333788311) *
                  zabs +
              793.8265125199484) *
                 zabs +
             440.4137358247522);
    } else {
        p = pdf / (zabs + 1.0 / (zabs + 2.0 / (zabs + 3.0 / (zabs + 4.0 /
                                                                        (zabs + 0.65)))));
    }
    return z < 0.0 ? p : 1.0 - p;
}

// Standard normal quantile (Acklam's approximation, ~1.15e-9 relative).
inline double inverse_normal_cdf(double p) {
    static const double a1 = -39.69683028665376, a2 = 220.9460984245205,
                        a3 = -275.9285104469687, a4 = 138.3577518672690,
                        a5 = -30.66479806614716, a6 = 2.506628277459239;
    static const double b1 = -54.47609879822406, b2 = 161.5858368580409,
                        b3 = -155.6989798598866, b4 = 66.80131188771972,
                        b5 = -13.28068155288572;
    static const double c1 = -7.784894002430293e-03, c2 = -3.223964580411365e-01,
                        c3 = -2.400758277161838, c4 = -2.549732539343734,
                        c5 = 4.374664141464968, c6 = 2.938163982698783;
    static const double d1 = 7.784695709041462e-03, d2 = 3.224671290700398e-01,
                        d3 = 2.445134137142996, d4 = 3.754408661907416;
    const double plow = 0.02425, phigh = 1.0 - plow;
    double q, r;
    if (p < plow) {
        q = std::sqrt(-2.0 * std::log(p));
        return (((((c1 * q + c2) * q + c3) * q + c4) * q + c5) * q + c6) /
               ((((d1 * q + d2) * q + d3) * q + d4) * q + 1.0);
    }
    if (p > phigh) {
        q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c1 * q + c2) * q + c3) * q + c4) * q + c5) * q + c6) /
               ((((d1 * q + d2) * q + d3) * q + d4) * q + 1.0);
    }
    q = p - 0.5;
    r = q * q;
    return (((((a1 * r + a2) * r + a3) * r + a4) * r + a5) * r + a6) * q /
           (((((b1 * r + b2) * r + b3) * r + b4) * r + b5) * r + 1.0);
}

// Mills ratio by a deep continued fraction; usable for z >= ~2 at this depth.
inline double mills_cf_deep(double z) {
    double acc = 0.0;
    for (int j = 400; j >= 1; --j) {
        acc = static_cast<double>(j) / (z + acc);
    }
    return 1.0 / (z + acc);
}

namespace detail {
inline double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_step(const std::function<double(double)>& f, double a,
                            double b, double fa, double fm, double fb,
                            double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}
} // namespace detail

inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-10, int depth = 40) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return detail::adaptive_step(f, a, b, fa, fm, fb,
                                 detail::simpson(a, b, fa, fm, fb), tol, depth);
}

// Kolmogorov-Smirnov sup distance of a sample against a model CDF.
// Sorts its argument.
inline double ks_distance(std::vector<double>& samples,
                          const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double F = cdf(samples[i]);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(std::fabs(F - lo), std::fabs(hi - F)));
    }
    return d;
}

} // namespace oracle
