#include "wptrelay/channel.hpp"

#include <cmath>

namespace wptrelay {

namespace {
constexpr double kLn10Over10 = 0.2302585092994045684017991;
}

double db_to_linear(double x_db) noexcept {
    return std::pow(10.0, x_db / 10.0);
}

double fading_sigma_ln(double fading_std_db) {
    if (fading_std_db < 0.0) {
        throw DomainError("fading_sigma_ln: negative std");
    }
    return kLn10Over10 * fading_std_db;
}

double path_loss_linear(const ChannelParams& params, double distance) {
    if (!(distance > 0.0)) {
        throw DomainError("path_loss_linear: distance must be positive");
    }
    return db_to_linear(params.pl_intercept_db -
                        10.0 * params.pl_exponent * std::log10(distance));
}

double sample_channel(const ChannelParams& params, double distance, RandomStream& rng) {
    const double pl = path_loss_linear(params, distance);
    const double sigma_ln = fading_sigma_ln(params.fading_std_db);
    // Fading is subtracted in dB, so the linear factor is exp(-sigma * Z).
    return pl * std::exp(-sigma_ln * rng.normal());
}

double required_power(const LinkBudget& budget, double h) {
    if (!(h > 0.0)) {
        throw DomainError("required_power: channel coefficient must be positive");
    }
    return budget.gamma_th * budget.noise_power / h;
}

double harvested_power(double alpha, double p_wpt, double a_r, double h_si) {
    if (!(alpha >= 0.0) || alpha > 1.0 || !(p_wpt >= 0.0) || !(a_r > 0.0) ||
        !(h_si > 0.0)) {
        throw DomainError("harvested_power: argument out of range");
    }
    return alpha * p_wpt * a_r * h_si;
}

} // namespace wptrelay
