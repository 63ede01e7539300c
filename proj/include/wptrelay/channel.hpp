#pragma once

#include "wptrelay/errors.hpp"
#include "wptrelay/rng.hpp"

namespace wptrelay {

/// Reference path-loss parameters for one link class (LoS or NLoS).
/// In dB: H_dB(d) = pl_intercept_db - 10 * pl_exponent * log10(d) - fading,
/// with fading ~ N(0, fading_std_db²).
struct ChannelParams {
    double pl_intercept_db = 0.0;
    double pl_exponent = 2.0;
    double fading_std_db = 0.0;
};

/// SNR target and power limits shared by all links.
struct LinkBudget {
    double gamma_th = 1.0;     // linear SNR threshold
    double noise_power = 1.0;  // W
    double p_max = 1.0;        // W
};

double db_to_linear(double x_db) noexcept;

/// Natural-log sigma of the lognormal fading factor corresponding to a
/// dB-domain normal std: sigma_ln = (ln 10 / 10) * fading_std_db.
double fading_sigma_ln(double fading_std_db);

/// Deterministic part of the channel coefficient at distance d (linear).
double path_loss_linear(const ChannelParams& params, double distance);

/// One channel realization: path loss times a lognormal fading factor drawn
/// from the caller's stream. The stream must not be shared across
/// concurrently evaluated trials.
double sample_channel(const ChannelParams& params, double distance, RandomStream& rng);

/// Transmit power needed to hit the SNR threshold through channel h:
/// gamma_th * noise / h. Realizes P_s, P_si and P_i for their channels.
double required_power(const LinkBudget& budget, double h);

/// Power harvested from a WPT allocation p_wpt through channel h_si with
/// collector efficiency alpha and aperture a_r.
double harvested_power(double alpha, double p_wpt, double a_r, double h_si);

} // namespace wptrelay
