#pragma once

#include "wptrelay/errors.hpp"
#include "wptrelay/numerics.hpp"
#include "wptrelay/rng.hpp"

namespace wptrelay {

/// The source's belief about one candidate's breakeven price.
///
/// A candidate is indifferent to relaying at v = p_si + k / H, where H is the
/// lognormal fading factor of the candidate-to-AP link (the one quantity the
/// source cannot observe) and k packages every known constant:
/// k = gamma_th * noise / (candidate_ap_path_loss * alpha * a_r * h_si).
/// The valuation support is the open interval (p_si, +inf).
class ValuationModel {
  public:
    ValuationModel(double p_si, double k, double sigma_ln);

    /// Builds the model from raw link quantities instead of a precomputed k.
    static ValuationModel from_link(double p_si, double gamma_th, double noise_power,
                                    double candidate_ap_path_loss, double alpha,
                                    double a_r, double h_si, double sigma_ln);

    double p_si() const noexcept { return p_si_; }
    double k() const noexcept { return k_; }
    double sigma_ln() const noexcept { return sigma_ln_; }

  private:
    double p_si_;
    double k_;
    double sigma_ln_;
};

/// One realized breakeven price.
struct Valuation {
    double value;
};

/// Minimum total source power that makes a candidate whole:
/// p_si + p_i / (alpha * a_r * h_si).
double min_inducement_power(double p_si, double p_i, double alpha, double a_r,
                            double h_si);

/// Fading factor consistent with a breakeven price v: k / (v - p_si).
/// Strictly decreasing in v; throws SupportError for v <= p_si.
double hss_of_valuation(const ValuationModel& model, double v);

/// Density of the breakeven price. Zero at and below the support edge.
double valuation_pdf(const ValuationModel& model, double v) noexcept;

/// Distribution function of the breakeven price; equals the upper normal tail
/// of the standardized log-fading because the price falls as fading grows.
double valuation_cdf(const ValuationModel& model, double v) noexcept;

/// Reverse-auction virtual valuation c(v) = v + F(v)/f(v). In closed form
/// c(v) = v + sigma_ln * (v - p_si) * mills_ratio(z) with
/// z = ln(k/(v - p_si)) / sigma_ln. Strictly increasing on the support.
double virtual_valuation(const ValuationModel& model, double v);

/// dc/dv = 2 + mills_ratio(z) * (sigma_ln - z); exceeds 1 on the whole
/// support, which is what makes the price distribution regular.
double virtual_valuation_derivative(const ValuationModel& model, double v);

/// Solves c(s) == target by bisection. The bracket starts at the support edge
/// and doubles k-steps outward until c passes the target. Tolerances are
/// taken from spec; its lo/hi fields are ignored.
double inverse_virtual_valuation(const ValuationModel& model, double target,
                                 const BisectionSpec& spec);

/// Draws a breakeven price by sampling the unknown fading factor.
Valuation sample_valuation(const ValuationModel& model, RandomStream& rng);

} // namespace wptrelay
